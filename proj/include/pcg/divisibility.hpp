#ifndef PCG_DIVISIBILITY_HPP
#define PCG_DIVISIBILITY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "pcg/presentation.hpp"
#include "pcg/rewrite.hpp"
#include "pcg/word.hpp"

namespace pcg {

// All divisibility here is cancellation-free: u | w iff w = u o v with
// lengths adding up.  Inputs are expected geodesic; operations reduce
// defensively where cheap.

struct DivisorWitness {
  Word divisor;
  Word quotient;
  std::vector<size_t> positions;  // letters of w realizing the divisor

  bool lengths_add(const Word& w) const {
    return divisor.size() + quotient.size() == w.size();
  }
};

namespace detail {

/// Letters of w that can be gathered at the front subject to `allowed`
/// symbols.  A letter joins iff its symbol is allowed and no earlier
/// non-joining letter blocks it (same symbol, or non-commuting).
inline std::vector<size_t> front_divisor_positions(const Presentation& p,
                                                   const Word& w,
                                                   const SymbolSet& allowed,
                                                   OpCounter* c) {
  SymbolSet blocked(p.rank());
  std::vector<size_t> pos;
  for (size_t i = 0; i < w.size(); ++i) {
    const int s = w[i].sym;
    count_query(c);
    count_elementary(c, 2);
    if (allowed.test(s) && !blocked.test(s)) {
      pos.push_back(i);
    } else {
      blocked.set(s);
      blocked |= p.non_commuting_with(s);
    }
  }
  return pos;
}

inline Word subsequence(const Word& w, const std::vector<size_t>& pos) {
  std::vector<Letter> ls;
  ls.reserve(pos.size());
  for (size_t i : pos) ls.push_back(w[i]);
  return Word(std::move(ls));
}

inline Word complement_subsequence(const Word& w,
                                   const std::vector<size_t>& pos) {
  std::vector<Letter> ls;
  ls.reserve(w.size() - pos.size());
  size_t k = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    if (k < pos.size() && pos[k] == i) {
      ++k;
    } else {
      ls.push_back(w[i]);
    }
  }
  return Word(std::move(ls));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Abelian divisors and chains

struct AbelianDivisor {
  Word divisor;   // ad(w)
  Word quotient;  // w = divisor o quotient
};

/// Greatest left abelian divisor ad(w): all letters movable to the leftmost
/// position.  Greedy scan; a letter joins iff it commutes with everything
/// collected so far and no excluded letter blocks it.
inline AbelianDivisor max_abelian_divisor(const Presentation& p, const Word& w,
                                          OpCounter* c = nullptr) {
  SymbolSet included(p.rank()), blocked(p.rank());
  std::vector<size_t> pos;
  int distinct = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    const int s = w[i].sym;
    count_query(c);
    if (!blocked.test(s) && p.commuting_with(s).contains(included)) {
      if (!included.test(s)) {
        included.set(s);
        ++distinct;
      }
      pos.push_back(i);
    } else {
      blocked.set(s);
      blocked |= p.non_commuting_with(s);
    }
  }
  count_elementary(c, 3LL * distinct + 1);
  return {detail::subsequence(w, pos), detail::complement_subsequence(w, pos)};
}

struct ChainDecomposition {
  std::vector<Word> chains;        // c_1 ... c_t, nonempty abelian words
  std::vector<int> chain_numbers;  // per letter of the source word
  size_t source_length = 0;

  size_t count() const { return chains.size(); }
  Word reassemble() const {
    std::vector<Letter> ls;
    for (const auto& ch : chains)
      ls.insert(ls.end(), ch.letters.begin(), ch.letters.end());
    return Word(std::move(ls));
  }
};

/// Chain decomposition by per-symbol counters: the chain number of a letter
/// with symbol x is 1 + max over the counters of symbols not commuting
/// with x.  At most 3rn elementary operations.
inline ChainDecomposition chain_decomposition(const Presentation& p,
                                              const Word& w,
                                              OpCounter* c = nullptr) {
  ChainDecomposition out;
  out.source_length = w.size();
  std::vector<int> m(size_t(p.rank()) + 1, 0);
  for (size_t i = 0; i < w.size(); ++i) {
    const int x = w[i].sym;
    int best = 0;
    long long q = 0;
    const SymbolSet& nc = p.non_commuting_with(x);
    for (int y = 1; y <= p.rank(); ++y) {
      if (nc.test(y)) {
        best = std::max(best, m[size_t(y)]);
        ++q;
      }
    }
    count_query(c, q);
    count_elementary(c, q + 1);
    m[size_t(x)] = 1 + best;
    if (int(out.chains.size()) < m[size_t(x)]) out.chains.resize(size_t(m[size_t(x)]));
    out.chains[size_t(m[size_t(x)]) - 1].letters.push_back(w[i]);
    out.chain_numbers.push_back(m[size_t(x)]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Divisibility tests

/// u | w on the left iff lg(u^-1 w) = lg(w) - lg(u).  The witness records
/// the quotient and the letters of w realizing the embedded copy of u.
inline std::optional<DivisorWitness> divides_left(const Presentation& p,
                                                  const Word& u, const Word& w,
                                                  OpCounter* c = nullptr) {
  Word ug = reduce_to_geodesic(p, u);
  Word wg = reduce_to_geodesic(p, w);
  if (ug.size() > wg.size()) return std::nullopt;
  Word ui = inverse(ug);
  std::vector<Letter> prod;
  prod.reserve(ui.size() + wg.size());
  for (size_t i = 0; i < ui.size(); ++i)
    prod.push_back(Letter{ui[i].sym, ui[i].exp, uint32_t(i)});
  for (size_t i = 0; i < wg.size(); ++i)
    prod.push_back(Letter{wg[i].sym, wg[i].exp, uint32_t(ui.size() + i)});
  auto rr = reduce_to_geodesic_tracked(p, Word(std::move(prod)), c);
  if (rr.word.size() != wg.size() - ug.size()) return std::nullopt;
  DivisorWitness wit;
  wit.divisor = ug;
  wit.quotient = make_word(rr.word.letters);
  for (auto [a, b] : rr.cancelled) {
    uint32_t widx = std::max(a, b);
    wit.positions.push_back(size_t(widx) - ui.size());
  }
  std::sort(wit.positions.begin(), wit.positions.end());
  return wit;
}

inline std::optional<DivisorWitness> divides_right(const Presentation& p,
                                                   const Word& u, const Word& w,
                                                   OpCounter* c = nullptr) {
  auto inv = divides_left(p, inverse(u), inverse(w), c);
  if (!inv) return std::nullopt;
  DivisorWitness wit;
  wit.divisor = reduce_to_geodesic(p, u);
  wit.quotient = inverse(inv->quotient);
  size_t n = reduce_to_geodesic(p, w).size();
  for (size_t pos : inv->positions) wit.positions.push_back(n - 1 - pos);
  std::sort(wit.positions.begin(), wit.positions.end());
  return wit;
}

// ---------------------------------------------------------------------------
// Greatest common divisor (general pair)

/// gd(u, v) exists for any pair: it is formed by the letters of v cancelled
/// in the reduction of u^-1 v.  The deterministic reduction strategy fixes
/// the letter selection; the result is selection-independent as an element.
inline Word gcd_pair(const Presentation& p, const Word& u, const Word& v,
                     OpCounter* c = nullptr) {
  Word ug = reduce_to_geodesic(p, u);
  Word vg = reduce_to_geodesic(p, v);
  Word ui = inverse(ug);
  std::vector<Letter> prod;
  prod.reserve(ui.size() + vg.size());
  for (size_t i = 0; i < ui.size(); ++i)
    prod.push_back(Letter{ui[i].sym, ui[i].exp, uint32_t(i)});
  for (size_t i = 0; i < vg.size(); ++i)
    prod.push_back(Letter{vg[i].sym, vg[i].exp, uint32_t(ui.size() + i)});
  auto rr = reduce_to_geodesic_tracked(p, Word(std::move(prod)), c);
  std::vector<size_t> pos;
  for (auto [a, b] : rr.cancelled) {
    uint32_t hi = std::max(a, b);
    uint32_t lo = std::min(a, b);
    if (lo < ui.size() && hi >= ui.size()) pos.push_back(size_t(hi) - ui.size());
  }
  std::sort(pos.begin(), pos.end());
  return make_word(detail::subsequence(vg, pos).letters);
}

// ---------------------------------------------------------------------------
// gcd / lm inside the divisor lattice of a common multiple

struct GcdLm {
  Word gcd;
  Word lm;
};

namespace detail {

/// Signed exponent per symbol of an abelian geodesic word.
inline std::map<int, int> abelian_exponents(const Word& w) {
  std::map<int, int> e;
  for (const auto& l : w.letters) e[l.sym] += l.exp;
  return e;
}

inline Word abelian_word_from(const std::map<int, int>& e) {
  std::vector<Letter> ls;
  for (auto [sym, exp] : e) {
    for (int k = 0; k < std::abs(exp); ++k)
      ls.push_back(Letter{sym, exp > 0 ? 1 : -1, 0});
  }
  return make_word(std::move(ls));
}

}  // namespace detail

/// Chainwise gcd and least common multiple of two divisors of w.  Each
/// chain pair costs four elementary operations (two chain extractions, one
/// intersection, one abelian gcd/lm), for at most 4n in total.
inline GcdLm gcd_lm_of_divisors(const Presentation& p, const Word& u,
                                const Word& v, const Word& w,
                                OpCounter* c = nullptr) {
  {
    ElementaryMute mute(c);
    if (!divides_left(p, u, w, c))
      throw precondition_error("gcd_lm_of_divisors: u does not divide w");
    if (!divides_left(p, v, w, c))
      throw precondition_error("gcd_lm_of_divisors: v does not divide w");
  }
  ChainDecomposition cu, cv;
  {
    ElementaryMute mute(c);
    cu = chain_decomposition(p, reduce_to_geodesic(p, u), c);
    cv = chain_decomposition(p, reduce_to_geodesic(p, v), c);
  }
  size_t k = std::max(cu.count(), cv.count());  // pad shorter list with 1
  std::vector<Letter> gcd_ls, lm_ls;
  for (size_t i = 0; i < k; ++i) {
    count_elementary(c, 4);
    std::map<int, int> eu, ev;
    if (i < cu.count()) eu = detail::abelian_exponents(cu.chains[i]);
    if (i < cv.count()) ev = detail::abelian_exponents(cv.chains[i]);
    std::map<int, int> eg, el = eu;
    for (auto [sym, exp] : ev) {
      auto it = eu.find(sym);
      if (it != eu.end()) {
        assert((exp > 0) == (it->second > 0) &&
               "divisors of a common multiple agree in sign");
        eg[sym] = (exp > 0 ? 1 : -1) *
                  std::min(std::abs(exp), std::abs(it->second));
        el[sym] = (exp > 0 ? 1 : -1) *
                  std::max(std::abs(exp), std::abs(it->second));
      } else {
        el[sym] = exp;
      }
    }
    Word wg = detail::abelian_word_from(eg);
    Word wl = detail::abelian_word_from(el);
    gcd_ls.insert(gcd_ls.end(), wg.letters.begin(), wg.letters.end());
    lm_ls.insert(lm_ls.end(), wl.letters.begin(), wl.letters.end());
  }
  return {make_word(std::move(gcd_ls)), make_word(std::move(lm_ls))};
}

// ---------------------------------------------------------------------------
// Parabolic and relative divisors

struct ParabolicDivisor {
  Word divisor;
  Word quotient;
  std::vector<size_t> positions;
};

/// Greatest left divisor of w inside the parabolic subgroup on Y.
inline ParabolicDivisor parabolic_gd(const Presentation& p, const Word& w,
                                     const SymbolSet& Y,
                                     OpCounter* c = nullptr) {
  auto pos = detail::front_divisor_positions(p, w, Y, c);
  return {detail::subsequence(w, pos), detail::complement_subsequence(w, pos),
          std::move(pos)};
}

/// Right-hand version, by the inversion trick: right divisors of w are the
/// inverses of left divisors of w^-1.
inline ParabolicDivisor parabolic_gd_right(const Presentation& p, const Word& w,
                                           const SymbolSet& Y,
                                           OpCounter* c = nullptr) {
  ParabolicDivisor inv = parabolic_gd(p, inverse(w), Y, c);
  ParabolicDivisor out;
  out.divisor = inverse(inv.divisor);
  out.quotient = inverse(inv.quotient);
  for (size_t pos : inv.positions) out.positions.push_back(w.size() - 1 - pos);
  std::sort(out.positions.begin(), out.positions.end());
  return out;
}

/// p_v(u): greatest left divisor of u whose symbols commute with every
/// symbol of alpha(v).  Computed as a parabolic divisor over that symbol
/// set; runs in at most (3|Y|+1) n elementary operations.
inline Word relative_divisor(const Presentation& p, const Word& u,
                             const Word& v, OpCounter* c = nullptr) {
  SymbolSet av = alpha(p, v);
  SymbolSet z(p.rank());
  for (int s = 1; s <= p.rank(); ++s) {
    count_query(c);
    if (p.commuting_with(s).contains(av)) z.set(s);
  }
  return parabolic_gd(p, u, z, c).divisor;
}

}  // namespace pcg

#endif
