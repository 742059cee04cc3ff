#include <catch2/catch_amalgamated.hpp>

#include "pcg/presentation.hpp"
#include "pcg/random.hpp"
#include "test_support.hpp"

using namespace pcg;
using namespace pcgtest;

TEST_CASE("parse_presentation basics") {
  Presentation f = parse_presentation("symbols: a b\n");
  REQUIRE(f.rank() == 2);
  REQUIRE_FALSE(f.commutes(1, 2));

  // repeated declarations are idempotent
  Presentation g = parse_presentation("symbols: a b\ncommute: a b\ncommute: a b\n");
  REQUIRE(g.commutes(1, 2));
  REQUIRE(g.commutes(2, 1));

  Presentation p = p5();
  REQUIRE(p.rank() == 5);
  REQUIRE(p.commutes(p.index_of("x1"), p.index_of("x3")));
  REQUIRE_FALSE(p.commutes(p.index_of("x1"), p.index_of("x2")));

  // comments and blank lines
  Presentation h = parse_presentation("# heading\n\nsymbols: a b # trailing\ncommute: a b\n");
  REQUIRE(h.commutes(1, 2));
}

TEST_CASE("parse_presentation errors") {
  REQUIRE_THROWS_AS(parse_presentation("symbols: a a\n"), parse_error);
  REQUIRE_THROWS_AS(parse_presentation("symbols: a b\ncommute: a c\n"), parse_error);
  REQUIRE_THROWS_AS(parse_presentation("symbols: a b\ncommute: a a\n"), parse_error);
  REQUIRE_THROWS_AS(parse_presentation("commute: a b\n"), parse_error);
  REQUIRE_THROWS_AS(parse_presentation("symbols: a b\nfrobnicate: a\n"), parse_error);
  REQUIRE_THROWS_AS(parse_presentation("symbols: a^2 b\n"), parse_error);
}

TEST_CASE("commutes is symmetric and reflexive") {
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    Presentation p = random_presentation(rng, 1 + int(rng() % 6), 50);
    for (int i = 1; i <= p.rank(); ++i) {
      REQUIRE(p.commutes(i, i));
      for (int j = 1; j <= p.rank(); ++j)
        REQUIRE(p.commutes(i, j) == p.commutes(j, i));
    }
  }
}

TEST_CASE("non_commutation_components") {
  Presentation p = p5();
  SymbolSet s = subset(p, {"x1", "x2", "x4", "x5"});
  auto comps = p.non_commutation_components(s);
  REQUIRE(comps.size() == 2);
  REQUIRE(comps[0] == subset(p, {"x1", "x2"}));
  REQUIRE(comps[1] == subset(p, {"x4", "x5"}));

  Presentation ab = abelian(3);
  auto singles = ab.non_commutation_components(ab.full_set());
  REQUIRE(singles.size() == 3);

  Presentation f = parse_presentation("symbols: x1 x2 x3\n");
  auto whole = f.non_commutation_components(f.full_set());
  REQUIRE(whole.size() == 1);
  REQUIRE(whole[0] == f.full_set());
}

TEST_CASE("components partition the set and commute across") {
  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    Presentation p = random_presentation(rng, 1 + int(rng() % 7), int(rng() % 100));
    SymbolSet s = random_symbol_subset(rng, p, p.rank());
    auto comps = p.non_commutation_components(s);
    SymbolSet uni(p.rank());
    for (const auto& c : comps) {
      REQUIRE((uni & c).empty());  // pairwise disjoint
      uni |= c;
    }
    REQUIRE(uni == s);
    for (size_t i = 0; i < comps.size(); ++i)
      for (size_t j = i + 1; j < comps.size(); ++j)
        for (int a : comps[i].to_vector())
          for (int b : comps[j].to_vector()) REQUIRE(p.commutes(a, b));
  }
}
