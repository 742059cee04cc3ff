#include <catch2/catch_amalgamated.hpp>

#include "pcg/conjugacy.hpp"
#include "pcg/oracle.hpp"
#include "pcg/random.hpp"
#include "test_support.hpp"

using namespace pcg;
using namespace pcgtest;

TEST_CASE("is_cyclically_reduced") {
  Presentation f = free3();
  REQUIRE(is_cyclically_reduced(f, Word()));
  REQUIRE_FALSE(is_cyclically_reduced(f, W(f, "x1 a x1^-1")));
  Presentation p = p5();
  REQUIRE_FALSE(is_cyclically_reduced(p, W(p, "x1 x2 x1^-1")));
  REQUIRE(is_cyclically_reduced(p, W(p, "x1 x2")));
}

TEST_CASE("cyclically_reduce") {
  Presentation f = free2();
  auto same = cyclically_reduce(f, W(f, "a b"));
  REQUIRE(same.word == W(f, "a b"));
  REQUIRE(same.witness.conjugator.empty());

  auto cr = cyclically_reduce(f, W(f, "a b a^-1"));
  REQUIRE(format_word(f, cr.word) == "b");
  REQUIRE(format_word(f, cr.witness.conjugator) == "a");
  REQUIRE(verify_witness(f, W(f, "a b a^-1"), cr.word, cr.witness.conjugator));

  // x1 commutes with x3 and x4, so the conjugating pair cancels under
  // plain geodesic reduction already
  Presentation p = p5();
  auto cp = cyclically_reduce(p, reduce_to_geodesic(p, W(p, "x1 x3 x4 x1^-1")));
  REQUIRE(element_equal(p, cp.word, W(p, "x3 x4")));
}

TEST_CASE("cyclic reduction invariants") {
  Rng rng(51);
  for (int t = 0; t < 250; ++t) {
    Presentation p = random_presentation(rng, 1 + int(rng() % 4), int(rng() % 100));
    Word w = reduce_to_geodesic(p, random_word(rng, p, rng() % 9));
    auto cr = cyclically_reduce(p, w);
    REQUIRE(is_cyclically_reduced(p, cr.word));
    REQUIRE(verify_witness(p, w, cr.word, cr.witness.conjugator));
    // minimal length in the conjugacy class, against the oracle
    if (w.size() <= 8) {
      auto cls = oracle::cr_set(p, w);
      for (const auto& v : cls) REQUIRE(v.size() == cr.word.size());
    }
  }
}

TEST_CASE("block_decomposition") {
  Presentation p = p5();
  auto whole = block_decomposition(p, W(p, "x1 x2"));
  REQUIRE(whole.blocks.size() == 1);

  auto two = block_decomposition(p, W(p, "x1 x2 x4 x5"));
  REQUIRE(two.blocks.size() == 2);
  REQUIRE(format_word(p, two.blocks[0]) == "x1 x2");
  REQUIRE(format_word(p, two.blocks[1]) == "x4 x5");

  Presentation ab = abelian(3);
  REQUIRE(block_decomposition(ab, W(ab, "x1 x2 x3")).blocks.size() == 3);
}

TEST_CASE("block decomposition invariants") {
  Rng rng(52);
  for (int t = 0; t < 200; ++t) {
    Presentation p = random_presentation(rng, 1 + int(rng() % 4), int(rng() % 100));
    Word w = reduce_to_geodesic(p, random_word(rng, p, rng() % 9));
    auto bd = block_decomposition(p, w);
    Word prod;
    for (size_t i = 0; i < bd.blocks.size(); ++i) {
      REQUIRE(p.non_commutation_components(bd.components[i]).size() == 1);
      for (size_t j = i + 1; j < bd.blocks.size(); ++j)
        for (int x : bd.components[i].to_vector())
          for (int y : bd.components[j].to_vector())
            REQUIRE(p.commutes(x, y));
      prod = concat(prod, bd.blocks[i]);
    }
    REQUIRE(element_equal(p, prod, w));
  }
}

TEST_CASE("pivot rotations") {
  Presentation f = free3();
  auto one = i_cyclic_permutations(f, W(f, "x1 a b"));
  REQUIRE(one.size() == 1);
  REQUIRE(one[0] == W(f, "x1 a b"));

  auto two = i_cyclic_permutations(f, W(f, "x1 a x1 b"));
  REQUIRE(two.size() == 2);
  REQUIRE(two[0] == W(f, "x1 a x1 b"));
  REQUIRE(two[1] == W(f, "x1 b x1 a"));

  Rng rng(53);
  for (int t = 0; t < 100; ++t) {
    Presentation p = random_presentation(rng, 1 + int(rng() % 4), int(rng() % 100));
    Word w = reduce_to_geodesic(p, random_word(rng, p, rng() % 8));
    for (const auto& rot : i_cyclic_permutations(p, w))
      REQUIRE(oracle::bruteforce_conjugate(p, w, rot));
  }
}

TEST_CASE("exhausted_form basics") {
  Presentation f = free2();
  // trivial leading Y-divisor: the word is its own exhausted form
  auto e = exhausted_form(f, W(f, "a b"), subset(f, {"b"}));
  REQUIRE(e.word == W(f, "a b"));
  REQUIRE(e.witness.conjugator.empty());

  REQUIRE_THROWS_AS(exhausted_form(f, W(f, "a b"), f.full_set()),
                    precondition_error);
  REQUIRE_THROWS_AS(exhausted_form(f, W(f, "a b a^-1"), subset(f, {"b"})),
                    precondition_error);
  Presentation p = p5();
  REQUIRE_THROWS_AS(exhausted_form(p, W(p, "x1 x2"), subset(p, {"x3"})),
                    precondition_error);  // alpha(w) != X
  // two non-commutation components: not a block
  Presentation q = parse_presentation(
      "symbols: a b c d\ncommute: a c\ncommute: a d\ncommute: b c\ncommute: b d\n");
  REQUIRE_THROWS_AS(exhausted_form(q, W(q, "a b c d"), subset(q, {"a"})),
                    precondition_error);
}

TEST_CASE("exhausted form: uniqueness and witnesses") {
  Rng rng(54);
  int done = 0;
  while (done < 120) {
    Presentation p = random_presentation(rng, 2 + int(rng() % 3), int(rng() % 70));
    if (p.non_commutation_components(p.full_set()).size() != 1) continue;
    Word w = cyclically_reduce(p, random_geodesic(rng, p, 2 + rng() % 7)).word;
    if (alpha(p, w) != p.full_set()) continue;
    if (p.non_commutation_components(alpha(p, w)).size() != 1) continue;
    SymbolSet y = random_symbol_subset(rng, p, 2);
    if (y == p.full_set()) y.reset(y.least());
    auto e0 = exhausted_form(p, w, y);
    REQUIRE(verify_witness(p, w, e0.word, e0.witness.conjugator));
    REQUIRE(is_cyclically_reduced(p, e0.word));
    REQUIRE(parabolic_gd(p, kb_normalize(p, e0.word), y).divisor.empty());
    for (const auto& l : e0.witness.conjugator.letters) REQUIRE(y.test(l.sym));
    // invariance under conjugation from G(Y)
    Word g = random_parabolic_word(rng, p, y, 3);
    Word v = cyclically_reduce(p, kb_normalize(p, conjugate_word(w, g))).word;
    if (alpha(p, v) == p.full_set()) {
      auto e1 = exhausted_form(p, v, y);
      REQUIRE(element_equal(p, e0.word, e1.word));
    }
    ++done;
  }
}

TEST_CASE("are_conjugate basics") {
  Presentation f = free2();
  Word w = W(f, "a b");
  auto self = are_conjugate(f, w, w);
  REQUIRE(self);
  REQUIRE(self->conjugator.empty());

  auto rot = are_conjugate(f, W(f, "a b"), W(f, "b a"));
  REQUIRE(rot);
  REQUIRE(verify_witness(f, W(f, "a b"), W(f, "b a"), rot->conjugator));

  REQUIRE_FALSE(are_conjugate(f, W(f, "a"), W(f, "b")));
  REQUIRE_FALSE(are_conjugate(f, W(f, "a"), Word()));
  REQUIRE(are_conjugate(f, Word(), Word()));

  // powers of the same run at different letters
  REQUIRE(are_conjugate(f, W(f, "a a b"), W(f, "a b a")));
  REQUIRE_FALSE(are_conjugate(f, W(f, "a a b"), W(f, "a b b")));
}

TEST_CASE("are_conjugate agrees with the oracle and yields witnesses") {
  Rng rng(55);
  for (int t = 0; t < 300; ++t) {
    Presentation p = random_presentation(rng, 1 + int(rng() % 4), int(rng() % 100));
    Word u = random_word(rng, p, rng() % 8);
    Word v;
    if (t % 2) {
      v = conjugate_word(u, random_word(rng, p, rng() % 4));
    } else {
      v = random_word(rng, p, rng() % 8);
    }
    auto got = are_conjugate(p, u, v);
    REQUIRE(got.has_value() == oracle::bruteforce_conjugate(p, u, v));
    if (got) REQUIRE(verify_witness(p, u, v, got->conjugator));
  }
}

TEST_CASE("conjugacy is symmetric and conjugation-invariant") {
  Rng rng(56);
  for (int t = 0; t < 150; ++t) {
    Presentation p = random_presentation(rng, 1 + int(rng() % 4), int(rng() % 100));
    Word u = random_word(rng, p, rng() % 7);
    Word v = random_word(rng, p, rng() % 7);
    Word z = random_word(rng, p, rng() % 5);
    bool uv = are_conjugate(p, u, v).has_value();
    REQUIRE(uv == are_conjugate(p, v, u).has_value());
    REQUIRE(uv == are_conjugate(p, conjugate_word(u, z), v).has_value());
  }
}

TEST_CASE("multi-block conjugacy agrees with blockwise decisions") {
  Rng rng(57);
  int done = 0;
  while (done < 80) {
    Presentation p = random_presentation(rng, 2 + int(rng() % 3), int(rng() % 100));
    Word u = cyclically_reduce(p, reduce_to_geodesic(p, random_word(rng, p, rng() % 8))).word;
    Word v = cyclically_reduce(p, reduce_to_geodesic(p, random_word(rng, p, rng() % 8))).word;
    auto bu = block_decomposition(p, u);
    auto bv = block_decomposition(p, v);
    if (bu.blocks.size() < 2 || bu.blocks.size() != bv.blocks.size()) continue;
    bool blockwise = true;
    for (size_t i = 0; i < bu.blocks.size(); ++i) {
      if (bu.components[i] != bv.components[i]) {
        blockwise = false;
        break;
      }
      if (!are_conjugate(p, bu.blocks[i], bv.blocks[i])) blockwise = false;
    }
    REQUIRE(are_conjugate(p, u, v).has_value() == blockwise);
    ++done;
  }
}

TEST_CASE("single-letter conjugation alternatives are exhaustive") {
  Rng rng(58);
  for (int t = 0; t < 300; ++t) {
    Presentation p = random_presentation(rng, 1 + int(rng() % 4), int(rng() % 100));
    Word w = reduce_to_geodesic(p, random_word(rng, p, 1 + rng() % 7));
    Letter y = random_letter(rng, p.rank());
    Word yw = make_word({y});
    bool commutes_all = symbol_commutes_with(p, y.sym, alpha(p, w));
    bool dl = divides_left(p, yw, w).has_value();
    bool dr = divides_right(p, inverse(yw), w).has_value();
    size_t len = reduce_to_geodesic(p, conjugate_word(w, yw)).size();
    if (commutes_all) {
      REQUIRE(len == w.size());
    } else if (dl && dr) {
      REQUIRE(len == w.size() - 2);
    } else if (dl || dr) {
      REQUIRE(len == w.size());
    } else {
      REQUIRE(len == w.size() + 2);
    }
  }
}

TEST_CASE("CR class is closed and connected under letter conjugations") {
  Rng rng(59);
  for (int t = 0; t < 40; ++t) {
    Presentation p = random_presentation(rng, 1 + int(rng() % 3), int(rng() % 100));
    Word w = reduce_to_geodesic(p, random_word(rng, p, rng() % 5));
    auto cls = oracle::cr_set(p, w);
    // independent enumeration: all conjugates by words of length <= 3
    // that happen to be cyclically reduced of minimal length
    size_t min_len = cls.begin()->size();
    std::set<Word> indep;
    std::vector<Word> conjs{Word()};
    for (int len = 1; len <= 3; ++len) {
      std::vector<Word> next;
      for (const auto& z : conjs) {
        if (z.size() == size_t(len) - 1) {
          for (int s = 1; s <= p.rank(); ++s)
            for (int e : {1, -1}) {
              Word nz = concat(z, make_word({Letter{s, e, 0}}));
              next.push_back(nz);
            }
        }
      }
      for (const auto& z : next) conjs.push_back(z);
    }
    for (const auto& z : conjs) {
      Word c = reduce_to_geodesic(p, conjugate_word(w, z));
      if (c.size() == min_len && is_cyclically_reduced(p, c))
        indep.insert(shortlex_normalize(p, c));
    }
    for (const auto& v : indep) REQUIRE(cls.count(v) == 1);
  }
}

TEST_CASE("CR class size is 2^(r-1) for the free product example") {
  for (int r = 3; r <= 5; ++r) {
    Presentation p = abelian_star_z(r);
    std::vector<Letter> ls;
    for (int i = 1; i <= r; ++i) ls.push_back(Letter{i, 1, 0});
    auto cls = oracle::cr_set(p, make_word(std::move(ls)));
    REQUIRE(cls.size() == size_t(1) << (r - 1));
  }
}

TEST_CASE("in_parabolic_conjugacy_class") {
  Presentation f = free2();
  Word w = W(f, "a b");
  SymbolSet y = subset(f, {"b"});
  auto self = in_parabolic_conjugacy_class(f, w, w, y);
  REQUIRE(self);
  REQUIRE(self->conjugator.empty());

  // different length: cannot be a cyclically reduced member of the class
  REQUIRE_FALSE(in_parabolic_conjugacy_class(f, W(f, "a b a"), w, y));

  Rng rng(61);
  int done = 0;
  while (done < 80) {
    Presentation p = random_presentation(rng, 2 + int(rng() % 3), int(rng() % 70));
    if (p.non_commutation_components(p.full_set()).size() != 1) continue;
    Word base = cyclically_reduce(p, random_geodesic(rng, p, 2 + rng() % 6)).word;
    if (alpha(p, base) != p.full_set()) continue;
    if (p.non_commutation_components(alpha(p, base)).size() != 1) continue;
    SymbolSet sub = random_symbol_subset(rng, p, 2);
    if (sub == p.full_set()) sub.reset(sub.least());
    Word g = random_parabolic_word(rng, p, sub, 3);
    Word v = kb_normalize(p, conjugate_word(base, g));
    auto wit = in_parabolic_conjugacy_class(p, v, base, sub);
    REQUIRE(wit);
    REQUIRE(verify_witness(p, base, v, wit->conjugator));
    for (const auto& l : wit->conjugator.letters) REQUIRE(sub.test(l.sym));
    ++done;
  }
}

TEST_CASE("double_coset_canonical") {
  Presentation p = p5();
  SymbolSet y = subset(p, {"x1", "x2"});
  SymbolSet z = subset(p, {"x4", "x5"});
  // no parabolic divisors on either side: the element is canonical
  Word g = W(p, "x3");
  auto d = double_coset_canonical(p, g, y, z);
  REQUIRE(element_equal(p, d.canonical, g));
  REQUIRE(d.h1.empty());
  REQUIRE(d.h2.empty());

  // an element of G(Y) collapses to the trivial representative
  auto e = double_coset_canonical(p, W(p, "x1 x2 x1"), y, z);
  REQUIRE(e.canonical.empty());

  Rng rng(62);
  for (int t = 0; t < 150; ++t) {
    Presentation q = random_presentation(rng, 1 + int(rng() % 4), int(rng() % 100));
    Word h = random_word(rng, q, rng() % 8);
    SymbolSet yy = random_symbol_subset(rng, q, 2);
    SymbolSet zz = random_symbol_subset(rng, q, 2);
    auto d0 = double_coset_canonical(q, h, yy, zz);
    REQUIRE(element_equal(q, concat(d0.h1, concat(d0.canonical, d0.h2)), h));
    REQUIRE(yy.contains(alpha(q, d0.h1)));
    REQUIRE(zz.contains(alpha(q, d0.h2)));
    REQUIRE(parabolic_gd(q, d0.canonical, yy).divisor.empty());
    REQUIRE(parabolic_gd_right(q, d0.canonical, zz).divisor.empty());
    Word a = random_parabolic_word(rng, q, yy, 2);
    Word b = random_parabolic_word(rng, q, zz, 2);
    auto d1 = double_coset_canonical(q, concat(a, concat(h, b)), yy, zz);
    REQUIRE(element_equal(q, d0.canonical, d1.canonical));
  }
}
