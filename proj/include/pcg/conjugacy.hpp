#ifndef PCG_CONJUGACY_HPP
#define PCG_CONJUGACY_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pcg/divisibility.hpp"
#include "pcg/presentation.hpp"
#include "pcg/rewrite.hpp"
#include "pcg/word.hpp"

namespace pcg {

/// Conjugator z with z^-1 u z = v for the operation's (u, v).
struct ConjugacyWitness {
  Word conjugator;
};

inline bool verify_witness(const Presentation& p, const Word& u, const Word& v,
                           const Word& z) {
  return element_equal(p, concat(inverse(z), concat(u, z)), v);
}

// ---------------------------------------------------------------------------
// Cyclic reduction

namespace detail {

/// Letters of the first chain: the letter values movable to the front of
/// w, each with one witness position.
inline std::vector<std::pair<Letter, size_t>> front_letter_divisors(
    const Presentation& p, const Word& w, OpCounter* c) {
  SymbolSet inc(p.rank()), blk(p.rank());
  std::vector<std::pair<Letter, size_t>> out;
  int distinct = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    const int s = w[i].sym;
    count_query(c);
    if (!blk.test(s) && p.commuting_with(s).contains(inc)) {
      if (!inc.test(s)) ++distinct;
      inc.set(s);
      out.emplace_back(w[i], i);
    } else {
      blk.set(s);
      blk |= p.non_commuting_with(s);
    }
  }
  count_elementary(c, 3LL * distinct + 1);
  return out;
}

}  // namespace detail

/// No letter is simultaneously a left divisor and, inverted, a right
/// divisor; equivalent to minimal length in the conjugacy class.
inline bool is_cyclically_reduced(const Presentation& p, const Word& w,
                                  OpCounter* c = nullptr) {
  auto front = detail::front_letter_divisors(p, w, c);
  auto back = detail::front_letter_divisors(p, reversed(w), c);
  for (const auto& [fl, fi] : front)
    for (const auto& [bl, bi] : back)
      if (fl.sym == bl.sym && fl.exp == -bl.exp) return false;
  return true;
}

struct CyclicReduction {
  Word word;
  ConjugacyWitness witness;  // z with z^-1 w z = word
};

/// Strips conjugating letters while some y divides w on the left and y^-1
/// on the right; each strip shortens the word by two.
inline CyclicReduction cyclically_reduce(const Presentation& p, const Word& w,
                                         OpCounter* c = nullptr) {
  Word cur = reduce_to_geodesic(p, w, c);
  std::vector<Letter> conj;
  for (;;) {
    auto front = detail::front_letter_divisors(p, cur, c);
    auto back = detail::front_letter_divisors(p, reversed(cur), c);
    count_elementary(c);  // occurrence-set intersection
    bool found = false;
    for (const auto& [fl, fi] : front) {
      for (const auto& [bl, bi] : back) {
        if (fl.sym == bl.sym && fl.exp == -bl.exp) {
          size_t front_pos = fi;
          size_t back_pos = cur.size() - 1 - bi;
          assert(front_pos < back_pos);
          std::vector<Letter> next;
          next.reserve(cur.size() - 2);
          for (size_t i = 0; i < cur.size(); ++i)
            if (i != front_pos && i != back_pos) next.push_back(cur[i]);
          conj.push_back(fl);
          count_transposition(c, 2);
          count_cancellation(c);
          count_elementary(c, 3);
          cur = Word(std::move(next));
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) break;
  }
  return {cur, ConjugacyWitness{make_word(std::move(conj))}};
}

// ---------------------------------------------------------------------------
// Block decomposition

struct BlockDecomposition {
  std::vector<Word> blocks;
  std::vector<SymbolSet> components;  // alpha of each block, Gamma-connected
};

/// Splits w into pairwise commuting factors, one per connected component of
/// the non-commutation graph on alpha(w), ordered by least symbol.
inline BlockDecomposition block_decomposition(const Presentation& p,
                                              const Word& w,
                                              OpCounter* c = nullptr) {
  SymbolSet a = alpha(p, w);
  auto comps = p.non_commutation_components(a);
  count_elementary(c, (long long)p.rank() * p.rank() + (long long)w.size());
  BlockDecomposition out;
  out.components = comps;
  out.blocks.assign(comps.size(), Word());
  for (const auto& l : w.letters) {
    for (size_t j = 0; j < comps.size(); ++j) {
      if (comps[j].test(l.sym)) {
        out.blocks[j].letters.push_back(l);
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exhausted forms

struct ExhaustedForm {
  Word word;
  ConjugacyWitness witness;  // z in G(Y) with z^-1 w z = word
};

namespace detail {

/// Core loop on a given active alphabet: repeatedly extract the greatest
/// left Y-divisor and rotate it to the back.  For a cyclically reduced
/// block with alpha(w) = active this terminates within |Y| + 1 rounds: the
/// symbol set of the extracted divisor shrinks strictly, else the
/// non-commutation graph on the active set would be disconnected.
inline ExhaustedForm exhausted_form_impl(const Presentation& p,
                                         const SymbolSet& active, Word w,
                                         const SymbolSet& Y, OpCounter* c) {
  std::vector<Letter> conj;
  int rounds = 0;
  const int cap = Y.count() + 2;
  for (;;) {
    ParabolicDivisor d;
    {
      ElementaryMute mute(c);
      d = parabolic_gd(p, w, Y, c);
    }
    count_elementary(c);
    if (d.divisor.empty()) break;
    if (++rounds > cap)
      throw std::logic_error("exhausted_form: round cap exceeded");
    conj.insert(conj.end(), d.divisor.letters.begin(),
                d.divisor.letters.end());
    w = concat(d.quotient, d.divisor);
  }
  (void)active;
  return {w, ConjugacyWitness{make_word(std::move(conj))}};
}

inline void require_exhaust_preconditions(const Presentation& p,
                                          const SymbolSet& active,
                                          const Word& w, const SymbolSet& Y) {
  if (!active.contains(Y) || Y == active)
    throw precondition_error(
        "exhausted_form: Y must be a proper subset of the alphabet");
  if (!is_cyclically_reduced(p, w))
    throw precondition_error("exhausted_form: word is not cyclically reduced");
  SymbolSet a = alpha(p, w);
  if (a != active)
    throw precondition_error(
        "exhausted_form: alpha(w) must be the whole alphabet");
  if (p.non_commutation_components(a).size() > 1)
    throw precondition_error("exhausted_form: word is not a block");
}

}  // namespace detail

/// The unique cyclically reduced G(Y)-conjugate of w with trivial left
/// Y-divisors.  Requires w cyclically reduced, a block, with alpha(w) = X.
inline ExhaustedForm exhausted_form(const Presentation& p, const Word& w,
                                    const SymbolSet& Y,
                                    OpCounter* c = nullptr) {
  Word g = reduce_to_geodesic(p, w, c);
  detail::require_exhaust_preconditions(p, p.full_set(), g, Y);
  return detail::exhausted_form_impl(p, p.full_set(), g, Y, c);
}

// ---------------------------------------------------------------------------
// Syllable-boundary cyclic permutations

/// All cyclic permutations of w that start at an occurrence of the pivot
/// symbol, paired with the rotated-away prefix (the conjugator: the
/// permutation equals prefix^-1 w prefix).  Duplicate elements are kept;
/// the count equals the number of pivot letters in w.
inline std::vector<std::pair<Word, Word>> pivot_rotations(const Word& w,
                                                          int pivot) {
  std::vector<std::pair<Word, Word>> out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i].sym != pivot) continue;
    std::vector<Letter> rot(w.letters.begin() + ptrdiff_t(i), w.letters.end());
    rot.insert(rot.end(), w.letters.begin(), w.letters.begin() + ptrdiff_t(i));
    std::vector<Letter> pre(w.letters.begin(), w.letters.begin() + ptrdiff_t(i));
    out.emplace_back(make_word(std::move(rot)), make_word(std::move(pre)));
  }
  if (out.empty()) out.emplace_back(w, Word());
  return out;
}

/// The syllable-boundary cyclic permutations of an HNN-cyclically-reduced
/// word, one per pivot letter; each is conjugate to w.
inline std::vector<Word> i_cyclic_permutations(const Presentation& p,
                                               const Word& w, int pivot = 1) {
  (void)p;
  std::vector<Word> out;
  for (auto& [rot, pre] : pivot_rotations(w, pivot)) out.push_back(rot);
  return out;
}

// ---------------------------------------------------------------------------
// Conjugacy decision

namespace detail {

inline Word compose(std::initializer_list<const Word*> parts) {
  std::vector<Letter> ls;
  for (const Word* w : parts)
    ls.insert(ls.end(), w->letters.begin(), w->letters.end());
  return make_word(std::move(ls));
}

std::optional<Word> conjugator_rec(const Presentation& p,
                                   const SymbolSet& active, const Word& g,
                                   const Word& h, OpCounter* c);

/// Single-block case with alpha = active: Collins' criterion.  Compare the
/// exhausted form of every pivot rotation of g against the exhausted form
/// of one pivot rotation of h, with Y the generating set of the associated
/// subgroup of the pivot.
inline std::optional<Word> conjugator_block(const Presentation& p,
                                            const SymbolSet& active,
                                            const Word& g1n, const Word& h1n,
                                            OpCounter* c) {
  const int pivot = active.least();
  SymbolSet agens = associated_subgroup_generators(p, active, pivot);
  auto hrots = pivot_rotations(h1n, pivot);
  const Word& hrot = hrots.front().first;
  const Word& hpre = hrots.front().second;
  ExhaustedForm eh = exhausted_form_impl(p, active, hrot, agens, c);
  Word ehn = kb_normalize(p, eh.word, c);
  for (auto& [rot, pre] : pivot_rotations(g1n, pivot)) {
    ExhaustedForm eg = exhausted_form_impl(p, active, rot, agens, c);
    if (kb_normalize(p, eg.word, c) == ehn) {
      Word zH_inv = inverse(eh.witness.conjugator);
      Word hpre_inv = inverse(hpre);
      return compose({&pre, &eg.witness.conjugator, &zH_inv, &hpre_inv});
    }
  }
  return std::nullopt;
}

inline std::optional<Word> conjugator_rec_impl(const Presentation& p,
                                               const SymbolSet& active,
                                               const Word& g, const Word& h,
                                               OpCounter* c) {
  Word gn = kb_normalize(p, g, c);
  Word hn = kb_normalize(p, h, c);
  if (gn == hn) return Word();
  CyclicReduction gr = cyclically_reduce(p, gn, c);
  CyclicReduction hr = cyclically_reduce(p, hn, c);
  const Word& zg = gr.witness.conjugator;
  Word zh_inv = inverse(hr.witness.conjugator);
  if (letter_multiset(gr.word) != letter_multiset(hr.word))
    return std::nullopt;
  Word g1n = kb_normalize(p, gr.word, c);
  Word h1n = kb_normalize(p, hr.word, c);
  if (g1n == h1n) return compose({&zg, &zh_inv});
  if (g1n.empty()) return std::nullopt;  // identity is conjugate only to itself

  SymbolSet a = alpha(p, g1n);  // equals alpha(h1n): multisets agree
  std::optional<Word> mid;
  if (a != active) {
    // both lie in a proper parabolic subgroup: decide there
    mid = conjugator_rec(p, a, g1n, h1n, c);
  } else {
    BlockDecomposition bg = block_decomposition(p, g1n, c);
    BlockDecomposition bh = block_decomposition(p, h1n, c);
    if (bg.blocks.size() != bh.blocks.size()) return std::nullopt;
    if (bg.blocks.size() > 1) {
      // components are ordered by least symbol; conjugate cyclically
      // reduced elements have identical alpha per block
      for (size_t i = 0; i < bg.components.size(); ++i)
        if (bg.components[i] != bh.components[i]) return std::nullopt;
      std::vector<Letter> zc;
      for (size_t i = 0; i < bg.blocks.size(); ++i) {
        auto zi = conjugator_rec(p, bg.components[i], bg.blocks[i],
                                 bh.blocks[i], c);
        if (!zi) return std::nullopt;
        zc.insert(zc.end(), zi->letters.begin(), zi->letters.end());
      }
      mid = make_word(std::move(zc));
    } else {
      mid = conjugator_block(p, active, g1n, h1n, c);
    }
  }
  if (!mid) return std::nullopt;
  return compose({&zg, &*mid, &zh_inv});
}

inline std::optional<Word> conjugator_rec(const Presentation& p,
                                          const SymbolSet& active,
                                          const Word& g, const Word& h,
                                          OpCounter* c) {
  return conjugator_rec_impl(p, active, g, h, c);
}

}  // namespace detail

/// Decides conjugacy of arbitrary g and h and produces a witness z with
/// z^-1 g z = h.  Normal forms, cyclic reduction, recursion into parabolic
/// subgroups and commuting blocks, and Collins' criterion via exhausted
/// forms of pivot rotations.
inline std::optional<ConjugacyWitness> are_conjugate(const Presentation& p,
                                                     const Word& g,
                                                     const Word& h,
                                                     OpCounter* c = nullptr) {
  auto z = detail::conjugator_rec(p, p.full_set(), g, h, c);
  if (!z) return std::nullopt;
  return ConjugacyWitness{kb_normalize(p, *z)};
}

// ---------------------------------------------------------------------------
// Restricted conjugacy

/// Decides v in w^{G(Y)} (conjugacy by an element of the parabolic
/// subgroup).  Requires w cyclically reduced, a block, alpha(w) = X.
inline std::optional<ConjugacyWitness> in_parabolic_conjugacy_class(
    const Presentation& p, const Word& v, const Word& w, const SymbolSet& Y,
    OpCounter* c = nullptr) {
  Word wg = reduce_to_geodesic(p, w, c);
  detail::require_exhaust_preconditions(p, p.full_set(), wg, Y);
  Word vn = kb_normalize(p, v, c);
  CyclicReduction vr = cyclically_reduce(p, vn, c);
  // members of w's class under G(Y) cyclically reduce via Y-letters only
  for (const auto& l : vr.witness.conjugator.letters)
    if (!Y.test(l.sym)) return std::nullopt;
  if (vr.word.size() != wg.size()) return std::nullopt;
  SymbolSet av = alpha(p, vr.word);
  if (av != p.full_set()) return std::nullopt;
  if (p.non_commutation_components(av).size() > 1) return std::nullopt;
  ExhaustedForm ev = detail::exhausted_form_impl(p, p.full_set(), vr.word, Y, c);
  ExhaustedForm ew = detail::exhausted_form_impl(p, p.full_set(), wg, Y, c);
  if (!element_equal(p, ev.word, ew.word, c)) return std::nullopt;
  Word zv_inv = inverse(ev.witness.conjugator);
  Word hz_inv = inverse(vr.witness.conjugator);
  Word z = detail::compose({&ew.witness.conjugator, &zv_inv, &hz_inv});
  return ConjugacyWitness{kb_normalize(p, z)};
}

// ---------------------------------------------------------------------------
// Double cosets of parabolic subgroups

struct DoubleCosetForm {
  Word canonical;  // trivial left-Y and right-Z divisors
  Word h1;         // in G(Y)
  Word h2;         // in G(Z); g = h1 * canonical * h2 as elements
};

/// Canonical representative of the double coset G(Y) g G(Z), obtained by
/// exhausting parabolic divisors on both sides.
inline DoubleCosetForm double_coset_canonical(const Presentation& p,
                                              const Word& g, const SymbolSet& Y,
                                              const SymbolSet& Z,
                                              OpCounter* c = nullptr) {
  Word cur = kb_normalize(p, g, c);
  std::vector<Letter> h1;
  std::vector<Letter> h2;
  for (;;) {
    ParabolicDivisor dl = parabolic_gd(p, cur, Y, c);
    if (!dl.divisor.empty()) {
      h1.insert(h1.end(), dl.divisor.letters.begin(), dl.divisor.letters.end());
      cur = dl.quotient;
      continue;
    }
    ParabolicDivisor dr = parabolic_gd_right(p, cur, Z, c);
    if (!dr.divisor.empty()) {
      h2.insert(h2.begin(), dr.divisor.letters.begin(), dr.divisor.letters.end());
      cur = dr.quotient;
      continue;
    }
    break;
  }
  return {kb_normalize(p, cur, c), make_word(std::move(h1)),
          make_word(std::move(h2))};
}

}  // namespace pcg

#endif
