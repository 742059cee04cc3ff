#ifndef PCG_REWRITE_HPP
#define PCG_REWRITE_HPP

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <vector>

#include "pcg/presentation.hpp"
#include "pcg/word.hpp"

namespace pcg {

// ---------------------------------------------------------------------------
// Orders

/// x_1 < x_1^-1 < x_2 < x_2^-1 < ... as a single integer key.
inline int letter_order_value(const Letter& l) {
  return l.sym * 2 + (l.exp < 0 ? 1 : 0);
}

/// ShortLex: shorter first, ties broken left-to-right by the letter order.
inline int shortlex_compare(const Presentation&, const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size() ? -1 : 1;
  for (size_t i = 0; i < u.size(); ++i) {
    int a = letter_order_value(u[i]);
    int b = letter_order_value(v[i]);
    if (a != b) return a < b ? -1 : 1;
  }
  return 0;
}

namespace detail {

struct PivotParse {
  std::vector<int> exponents;     // signed run exponents
  std::vector<Word> factors;      // k+1 factors, pivot-free
};

/// Splits w at maximal constant-sign runs of the pivot symbol.
inline PivotParse parse_pivot_runs(const Word& w, int pivot) {
  PivotParse out;
  Word cur;
  for (const auto& l : w.letters) {
    if (l.sym == pivot) {
      if (!out.exponents.empty() && cur.empty() &&
          ((out.exponents.back() > 0) == (l.exp > 0))) {
        out.exponents.back() += l.exp;
      } else {
        out.factors.push_back(cur);
        cur = Word();
        out.exponents.push_back(l.exp);
      }
    } else {
      cur.letters.push_back(l);
    }
  }
  out.factors.push_back(cur);
  return out;
}

/// Splits w at every single pivot letter (exponents +-1).  This is the
/// parse the order compares by: it keeps every move of the rule system
/// strictly decreasing, which maximal runs would not (a move splitting a
/// run would raise the run count).
inline PivotParse parse_pivot_letters(const Word& w, int pivot) {
  PivotParse out;
  Word cur;
  for (const auto& l : w.letters) {
    if (l.sym == pivot) {
      out.factors.push_back(cur);
      cur = Word();
      out.exponents.push_back(l.exp);
    } else {
      cur.letters.push_back(l);
    }
  }
  out.factors.push_back(cur);
  return out;
}

inline int prec_compare_rec(const Word& f, const Word& g, int pivot, int rank) {
  if (f.size() != g.size()) return f.size() < g.size() ? -1 : 1;
  if (f == g) return 0;
  if (pivot > rank) return 0;
  PivotParse pf = parse_pivot_letters(f, pivot);
  PivotParse pg = parse_pivot_letters(g, pivot);
  if (pf.exponents.size() != pg.exponents.size())
    return pf.exponents.size() < pg.exponents.size() ? -1 : 1;
  for (size_t i = 0; i < pf.exponents.size(); ++i)
    if (pf.exponents[i] != pg.exponents[i])
      return pf.exponents[i] < pg.exponents[i] ? -1 : 1;
  for (size_t i = 0; i < pf.factors.size(); ++i) {
    int c = prec_compare_rec(pf.factors[i], pg.factors[i], pivot + 1, rank);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace detail

/// The recursive well-order on the free group: length, then pivot-syllable
/// count, then exponent vector lexicographically, then the factor tuple
/// lexicographically over the smaller alphabet.
inline int prec_compare(const Presentation& p, const Word& f, const Word& g) {
  return detail::prec_compare_rec(f, g, 1, p.rank());
}

// ---------------------------------------------------------------------------
// Rewrite rule instances.  Exposed so that tests can replay the systems
// with arbitrary application orders.

enum class RuleKind { Cancellation, BSMove, KBMove };

struct RewriteRuleApplication {
  RuleKind kind;
  size_t pos;  // first letter of the pattern
  size_t end;  // last letter of the pattern
};

/// All applicable instances of the ShortLex system on w: cancellations
/// x^e x^-e -> 1 plus moves  x_i^e w' x_j^n -> x_j^n x_i^e w'  subject to
/// i > j > k and [x_j,x_k]=1 for every interior symbol k, and [x_i,x_j]=1.
/// Each move brings a strictly smaller letter forward, so it decreases the
/// ShortLex order; requiring in addition that the interior not commute
/// with x_i would leave words stuck above their minimum.
inline std::vector<RewriteRuleApplication> bs_instances(const Presentation& p,
                                                        const Word& w) {
  std::vector<RewriteRuleApplication> out;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i].sym == w[i + 1].sym && w[i].exp == -w[i + 1].exp)
      out.push_back({RuleKind::Cancellation, i, i + 1});
  for (size_t m = 1; m < w.size(); ++m) {
    const int j = w[m].sym;
    for (size_t q = m; q-- > 0;) {
      const int cand = w[q].sym;
      if (cand > j) {
        // candidate outer letter x_i: interior letters w(q,m) were all
        // accepted below (index < j, commuting with x_j)
        if (p.commutes(cand, j)) out.push_back({RuleKind::BSMove, q, m});
        // x_i itself cannot be part of a longer interior (its index >= j)
        break;
      }
      if (cand == j || !p.commutes(cand, j)) break;  // interior must have
                                                     // index < j and commute
    }
  }
  return out;
}

/// All applicable instances of the recursively defined system: cancellations
/// plus moves  x_i^n w' x_piv^e -> w' x_piv^e x_i^n  where piv is the least
/// symbol of the pattern, i > piv, x_i commutes with x_piv and with all of
/// w', and w' contains neither x_piv nor x_i.
inline std::vector<RewriteRuleApplication> kb_instances(const Presentation& p,
                                                        const Word& w) {
  std::vector<RewriteRuleApplication> out;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i].sym == w[i + 1].sym && w[i].exp == -w[i + 1].exp)
      out.push_back({RuleKind::Cancellation, i, i + 1});
  for (size_t m = 0; m < w.size(); ++m) {
    const int piv = w[m].sym;
    SymbolSet seen(p.rank());  // interior symbols so far
    for (size_t q = m; q-- > 0;) {
      const int cand = w[q].sym;
      if (cand <= piv) break;  // pattern must stay inside the sub-alphabet
      if (!seen.test(cand) && p.commutes(cand, piv)) {
        bool ok = true;
        for (size_t t = q + 1; ok && t < m; ++t)
          if (!p.commutes(cand, w[t].sym)) ok = false;
        if (ok) out.push_back({RuleKind::KBMove, q, m});
      }
      seen.set(cand);
    }
  }
  return out;
}

inline Word apply_rule(const Word& w, const RewriteRuleApplication& a) {
  std::vector<Letter> v = w.letters;
  switch (a.kind) {
    case RuleKind::Cancellation:
      v.erase(v.begin() + ptrdiff_t(a.end));
      v.erase(v.begin() + ptrdiff_t(a.pos));
      break;
    case RuleKind::BSMove: {
      Letter moved = v[a.end];  // x_j hops to the front of the pattern
      v.erase(v.begin() + ptrdiff_t(a.end));
      v.insert(v.begin() + ptrdiff_t(a.pos), moved);
      break;
    }
    case RuleKind::KBMove: {
      Letter moved = v[a.pos];  // x_i hops past the pattern
      v.erase(v.begin() + ptrdiff_t(a.pos));
      v.insert(v.begin() + ptrdiff_t(a.end), moved);
      break;
    }
  }
  return Word(std::move(v));
}

// ---------------------------------------------------------------------------
// ShortLex normal form

/// The <= -minimal representative of [w].  Strategy: reduce to a geodesic
/// first, then apply moves leftmost-innermost with restart; confluence of
/// the system makes the choice of order immaterial.
inline Word shortlex_normalize(const Presentation& p, const Word& w,
                               OpCounter* c = nullptr) {
  Word cur = reduce_to_geodesic(p, w, c);
  for (;;) {
    auto apps = bs_instances(p, cur);
    if (apps.empty()) break;
    const RewriteRuleApplication* best = &apps[0];
    for (const auto& a : apps)
      if (a.end < best->end || (a.end == best->end && a.pos > best->pos))
        best = &a;
    assert(best->kind != RuleKind::Cancellation);  // input is geodesic
    count_transposition(c);
    count_elementary(c);
    cur = apply_rule(cur, *best);
  }
  return cur;
}

// ---------------------------------------------------------------------------
// Normal form for the recursive order, computed incrementally.

namespace detail {

inline Word take_positions(const Word& w, const std::vector<size_t>& pos) {
  std::vector<Letter> ls;
  ls.reserve(pos.size());
  for (size_t i : pos) ls.push_back(w[i]);
  return Word(std::move(ls));
}

inline Word complement_positions(const Word& w,
                                 const std::vector<size_t>& pos) {
  std::vector<Letter> ls;
  ls.reserve(w.size() - pos.size());
  size_t j = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    if (j < pos.size() && pos[j] == i) {
      ++j;
    } else {
      ls.push_back(w[i]);
    }
  }
  return Word(std::move(ls));
}

/// Letters of w whose symbols lie in `allowed` and which can be gathered
/// at the right end (no later letter of the same symbol or non-commuting
/// symbol blocks them).  Returns positions in ascending order.
inline std::vector<size_t> back_divisor_positions(const Presentation& p,
                                                  const Word& w,
                                                  const SymbolSet& allowed,
                                                  OpCounter* c) {
  SymbolSet blocked(p.rank());
  std::vector<size_t> pos;
  for (size_t i = w.size(); i-- > 0;) {
    const int s = w[i].sym;
    count_query(c);
    if (allowed.test(s) && !blocked.test(s)) {
      pos.push_back(i);
    } else {
      blocked.set(s);
      blocked |= p.non_commuting_with(s);
    }
  }
  std::reverse(pos.begin(), pos.end());
  return pos;
}

/// Normal form at pivot level k of a geodesic word over {x_k..x_r}.
/// Mirrors the HNN construction: letters commuting with the pivot are
/// pushed rightward across every pivot letter they can reach, so each
/// emitted factor keeps no such letter at a position movable to its right
/// end; factors and the tail are normalized recursively over the smaller
/// alphabet.
inline std::vector<Letter> kb_normalize_rec(const Presentation& p,
                                            std::vector<Letter> u, int k,
                                            OpCounter* c) {
  if (k > p.rank() || u.size() <= 1) return u;
  bool has_pivot = false;
  bool has_deeper = false;
  for (const auto& l : u) {
    if (l.sym == k) has_pivot = true;
    if (l.sym > k) has_deeper = true;
  }
  if (!has_pivot) return kb_normalize_rec(p, std::move(u), k + 1, c);

  SymbolSet agens(p.rank());
  if (has_deeper)
    for (int t = k + 1; t <= p.rank(); ++t)
      if (p.commutes(t, k)) agens.set(t);

  std::vector<Letter> out;
  out.reserve(u.size());
  std::vector<Letter> pending;
  for (const auto& l : u) {
    if (l.sym != k) {
      pending.push_back(l);
      continue;
    }
    Word seg(kb_normalize_rec(p, std::move(pending), k + 1, c));
    pending.clear();
    auto hop = back_divisor_positions(p, seg, agens, c);
    Word stay = complement_positions(seg, hop);
    Word hopped = take_positions(seg, hop);
    if (!hop.empty()) {
      count_transposition(c);
      count_elementary(c);
    }
    // the staying factor is final; renormalize it, gaps left by extracted
    // letters may enable further moves inside it
    std::vector<Letter> stayn =
        kb_normalize_rec(p, std::move(stay.letters), k + 1, c);
    out.insert(out.end(), stayn.begin(), stayn.end());
    assert(!(stayn.empty() && !out.empty() && out.back().sym == k &&
             out.back().exp == -l.exp) &&
           "pinch cannot occur in a geodesic word");
    out.push_back(l);
    pending = std::move(hopped.letters);
  }
  std::vector<Letter> tail = kb_normalize_rec(p, std::move(pending), k + 1, c);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

}  // namespace detail

/// The minimal representative of [w] under the recursive order; coincides
/// with the HNN-normal form.  On geodesic input the pass performs at most
/// two elementary transformations per letter.
inline Word kb_normalize(const Presentation& p, const Word& w,
                         OpCounter* c = nullptr) {
  Word g = reduce_to_geodesic(p, w, c);
  return Word(detail::kb_normalize_rec(p, std::move(g.letters), 1, c));
}

/// Element equality via normal forms.
inline bool element_equal(const Presentation& p, const Word& a, const Word& b,
                          OpCounter* c = nullptr) {
  return kb_normalize(p, a, c) == kb_normalize(p, b, c);
}

inline bool is_identity(const Presentation& p, const Word& a) {
  return reduce_to_geodesic(p, a).empty();
}

// ---------------------------------------------------------------------------
// HNN syllable decomposition

/// w = s_0 x^{a_1} s_1 ... s_{k-1} x^{a_k} v with pivot-free factors.  The
/// factors of the normal form satisfy the coset-representative conditions:
/// no letter commuting with the pivot can be moved to a factor's right end.
struct SyllableForm {
  int pivot = 1;
  std::vector<Word> prefix_factors;  // s_0 .. s_{k-1}
  std::vector<int> exponents;        // a_1 .. a_k, nonzero
  Word tail;                         // v
  int syllable_length() const { return int(exponents.size()); }

  Word reassemble() const {
    std::vector<Letter> ls;
    for (size_t i = 0; i < exponents.size(); ++i) {
      for (const auto& l : prefix_factors[i].letters) ls.push_back(l);
      int e = exponents[i] > 0 ? 1 : -1;
      for (int k = 0; k < std::abs(exponents[i]); ++k)
        ls.push_back(Letter{pivot, e, 0});
    }
    for (const auto& l : tail.letters) ls.push_back(l);
    return make_word(std::move(ls));
  }
};

/// Unique decomposition of the element of w relative to the pivot symbol,
/// read off the normal form.
inline SyllableForm syllable_decompose(const Presentation& p, const Word& w,
                                       int pivot = 1, OpCounter* c = nullptr) {
  Word nf = kb_normalize(p, w, c);
  detail::PivotParse parse = detail::parse_pivot_runs(nf, pivot);
  SyllableForm out;
  out.pivot = pivot;
  out.exponents = parse.exponents;
  for (size_t i = 0; i + 1 < parse.factors.size(); ++i)
    out.prefix_factors.push_back(parse.factors[i]);
  out.tail = parse.factors.back();
  return out;
}

/// Generators of the associated subgroup for the given pivot: symbols of
/// `active` other than the pivot that commute with it.
inline SymbolSet associated_subgroup_generators(const Presentation& p,
                                                const SymbolSet& active,
                                                int pivot) {
  SymbolSet a = active & p.commuting_with(pivot);
  a.reset(pivot);
  return a;
}

inline SymbolSet associated_subgroup_generators(const Presentation& p,
                                                int pivot = 1) {
  return associated_subgroup_generators(p, p.full_set(), pivot);
}

/// True iff the letters of w all lie in the subgroup generated by `gens`
/// (for geodesic w this is membership in the parabolic subgroup).
inline bool word_in_parabolic(const Presentation& p, const Word& w,
                              const SymbolSet& gens) {
  return gens.contains(alpha(p, w));
}

/// HNN-cyclically reduced: the normal form starts with a pivot letter,
/// no factor strictly between pivot runs lies in the associated subgroup,
/// and the tail either is trivial with matching first/last run signs or
/// lies outside the associated subgroup.  Pivot-free words are reduced by
/// convention (the recursion to lower rank handles them).
inline bool is_hnn_cyclically_reduced(const Presentation& p, const Word& w,
                                      int pivot = 1) {
  SyllableForm f = syllable_decompose(p, w, pivot);
  const int k = f.syllable_length();
  if (k == 0) return true;
  if (!f.prefix_factors[0].empty()) return false;
  SymbolSet agens = associated_subgroup_generators(p, pivot);
  for (int i = 1; i < k; ++i)
    if (word_in_parabolic(p, f.prefix_factors[size_t(i)], agens)) return false;
  if (f.tail.empty())
    return (f.exponents.front() > 0) == (f.exponents.back() > 0);
  return !word_in_parabolic(p, f.tail, agens);
}

namespace detail {

inline bool hnn_shape_check_rec(const Presentation& p, const Word& w,
                                int pivot) {
  if (pivot > p.rank() || w.empty()) return true;
  PivotParse parse = parse_pivot_runs(w, pivot);
  SymbolSet agens = associated_subgroup_generators(p, pivot);
  // every factor before a pivot run: no letter of A movable to its right end
  for (size_t i = 0; i + 1 < parse.factors.size(); ++i) {
    const Word& s = parse.factors[i];
    for (size_t a = 0; a < s.size(); ++a) {
      if (!agens.test(s[a].sym)) continue;
      bool movable = true;
      for (size_t b = a + 1; movable && b < s.size(); ++b)
        if (s[b].sym == s[a].sym || !p.commutes(s[a].sym, s[b].sym))
          movable = false;
      if (movable) return false;
    }
  }
  for (const auto& f : parse.factors)
    if (!hnn_shape_check_rec(p, f, pivot + 1)) return false;
  return true;
}

}  // namespace detail

/// Structural check that w is shaped like an HNN-normal form: recursively,
/// no coset-representative factor carries a letter of the associated
/// subgroup that commutation relations could move to the factor's right
/// end.  Meaningful on normalized words, where it always holds.
inline bool hnn_shape_check(const Presentation& p, const Word& w) {
  return detail::hnn_shape_check_rec(p, w, 1);
}

}  // namespace pcg

#endif
