#ifndef PCG_WORD_HPP
#define PCG_WORD_HPP

#include <cassert>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pcg/presentation.hpp"

namespace pcg {

/// One occurrence of a symbol in a word.  The id is a stable identifier
/// that survives admissible swaps, so individual occurrences can be
/// tracked through transformations (coloured-letter arguments).
struct Letter {
  int sym = 0;       // 1-based symbol index
  int exp = 1;       // +1 or -1
  uint32_t id = 0;

  bool same_value(const Letter& o) const { return sym == o.sym && exp == o.exp; }
  Letter inverse() const { return Letter{sym, -exp, id}; }
};

/// A word over X u X^-1: a sequence of letters.  Operations treat words
/// as immutable values and return new words.  Equality compares letter
/// values (symbol and exponent), never ids.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  const Letter& operator[](size_t i) const { return letters[i]; }

  bool operator==(const Word& o) const {
    if (letters.size() != o.letters.size()) return false;
    for (size_t i = 0; i < letters.size(); ++i)
      if (!letters[i].same_value(o.letters[i])) return false;
    return true;
  }
  bool operator!=(const Word& o) const { return !(*this == o); }
  bool operator<(const Word& o) const {  // plain container order, for set keys
    if (letters.size() != o.letters.size())
      return letters.size() < o.letters.size();
    for (size_t i = 0; i < letters.size(); ++i) {
      if (letters[i].sym != o.letters[i].sym)
        return letters[i].sym < o.letters[i].sym;
      if (letters[i].exp != o.letters[i].exp)
        return letters[i].exp < o.letters[i].exp;
    }
    return false;
  }
};

/// Assigns fresh sequential ids.
inline Word make_word(std::vector<Letter> ls) {
  for (size_t i = 0; i < ls.size(); ++i) ls[i].id = uint32_t(i);
  return Word(std::move(ls));
}

inline Word inverse(const Word& w) {
  std::vector<Letter> ls;
  ls.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    ls.push_back(it->inverse());
  return make_word(std::move(ls));
}

inline Word concat(const Word& a, const Word& b) {
  std::vector<Letter> ls;
  ls.reserve(a.size() + b.size());
  ls.insert(ls.end(), a.letters.begin(), a.letters.end());
  ls.insert(ls.end(), b.letters.begin(), b.letters.end());
  return make_word(std::move(ls));
}

inline Word concat(const Word& a, const Word& b, const Word& c) {
  return concat(concat(a, b), c);
}

/// z^-1 w z, unreduced.
inline Word conjugate_word(const Word& w, const Word& z) {
  return concat(inverse(z), concat(w, z));
}

inline Word reversed(const Word& w) {
  std::vector<Letter> ls(w.letters.rbegin(), w.letters.rend());
  return Word(std::move(ls));
}

/// Multiset of letter values: (sym, exp) -> count.  Invariant under
/// admissible permutations, hence equal for all geodesic forms of an
/// element.
inline std::map<std::pair<int, int>, int> letter_multiset(const Word& w) {
  std::map<std::pair<int, int>, int> m;
  for (const auto& l : w.letters) ++m[{l.sym, l.exp}];
  return m;
}

/// Tallies of the basic operations of the complexity model: cancellation,
/// transposition of a letter with an admissible interval, and commutation
/// query.  The elementary counter tracks the coarser macro-operation
/// accounting that the per-algorithm bounds are phrased in.  Counters are
/// owned per call; operations never share them implicitly.
struct OpCounter {
  long long cancellations = 0;
  long long transpositions = 0;
  long long queries = 0;
  long long elementary = 0;
  int mute_elementary = 0;  // >0 suppresses elementary charging in subroutines

  long long basic_total() const { return cancellations + transpositions + queries; }
};

inline void count_cancellation(OpCounter* c, long long k = 1) {
  if (c) c->cancellations += k;
}
inline void count_transposition(OpCounter* c, long long k = 1) {
  if (c) c->transpositions += k;
}
inline void count_query(OpCounter* c, long long k = 1) {
  if (c) c->queries += k;
}
inline void count_elementary(OpCounter* c, long long k = 1) {
  if (c && c->mute_elementary == 0) c->elementary += k;
}

/// RAII guard: inside its scope, elementary charges are suppressed while
/// basic counters keep accumulating.  Used by algorithms whose own
/// accounting already covers their subroutines.
class ElementaryMute {
public:
  explicit ElementaryMute(OpCounter* c) : c_(c) {
    if (c_) ++c_->mute_elementary;
  }
  ~ElementaryMute() {
    if (c_) --c_->mute_elementary;
  }
  ElementaryMute(const ElementaryMute&) = delete;
  ElementaryMute& operator=(const ElementaryMute&) = delete;

private:
  OpCounter* c_;
};

// ---------------------------------------------------------------------------
// Parsing and formatting

/// Tokens are `name` or `name^-1`, whitespace separated.  `1` denotes the
/// empty word.
inline Word parse_word(const Presentation& p, const std::string& text) {
  std::istringstream ss(text);
  std::vector<Letter> ls;
  std::string tok;
  while (ss >> tok) {
    if (tok == "1" && ls.empty() && !(ss >> tok)) break;
    int exp = 1;
    auto caret = tok.find('^');
    std::string name = tok;
    if (caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string e = tok.substr(caret + 1);
      if (e == "-1")
        exp = -1;
      else if (e == "1")
        exp = 1;
      else
        throw parse_error("malformed token: " + tok);
    }
    int s = p.index_of(name);
    if (s == 0) throw parse_error("unknown symbol: " + name);
    ls.push_back(Letter{s, exp, 0});
  }
  return make_word(std::move(ls));
}

/// Canonical spelling; the empty word formats as the empty string.
inline std::string format_word(const Presentation& p, const Word& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += p.name(w[i].sym);
    if (w[i].exp < 0) out += "^-1";
  }
  return out;
}

/// Display form: the identity element prints as `1`.
inline std::string display_word(const Presentation& p, const Word& w) {
  return w.empty() ? "1" : format_word(p, w);
}

// ---------------------------------------------------------------------------
// Geodesic reduction

struct ReduceResult {
  Word word;
  /// Ids of cancelled letters, as (left, right) pairs in cancellation order.
  std::vector<std::pair<uint32_t, uint32_t>> cancelled;
};

/// Reduces w to a geodesic word for the same group element using only
/// admissible swaps and cancellations.  Strategy: scan left to right, for
/// each letter greedily extend the interval of letters commuting with it,
/// cancel on meeting its inverse, restart after each cancellation.
inline ReduceResult reduce_to_geodesic_tracked(const Presentation& p,
                                               const Word& w,
                                               OpCounter* c = nullptr) {
  ReduceResult res;
  std::vector<Letter> v = w.letters;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < v.size() && !changed; ++i) {
      const Letter& y = v[i];
      for (size_t j = i + 1; j < v.size(); ++j) {
        count_query(c);
        if (v[j].sym == y.sym) {
          if (v[j].exp == -y.exp) {
            // subword y w[i+1,j-1] y^-1 with y commuting with the interval
            res.cancelled.emplace_back(y.id, v[j].id);
            count_cancellation(c);
            count_elementary(c);
            v.erase(v.begin() + ptrdiff_t(j));
            v.erase(v.begin() + ptrdiff_t(i));
            changed = true;
          }
          break;  // same symbol, same sign: interval cannot extend past it
        }
        if (!p.commutes(v[j].sym, y.sym)) break;
      }
    }
  }
  assert((w.size() - v.size()) % 2 == 0);  // parity of length is invariant
  res.word = Word(std::move(v));
  return res;
}

inline Word reduce_to_geodesic(const Presentation& p, const Word& w,
                               OpCounter* c = nullptr) {
  return reduce_to_geodesic_tracked(p, w, c).word;
}

inline bool is_geodesic(const Presentation& p, const Word& w,
                        OpCounter* c = nullptr) {
  return reduce_to_geodesic(p, w, c).size() == w.size();
}

// ---------------------------------------------------------------------------
// Occurrence sets

/// alpha(w): symbols occurring in the geodesic form of w.  Well defined on
/// group elements since admissible transformations preserve occurrences.
inline SymbolSet alpha(const Presentation& p, const Word& w) {
  Word g = is_geodesic(p, w) ? w : reduce_to_geodesic(p, w);
  SymbolSet s(p.rank());
  for (const auto& l : g.letters) s.set(l.sym);
  return s;
}

/// Generating set of A(w): symbols outside alpha(w) that commute with
/// every symbol of alpha(w).
inline SymbolSet commuting_complement(const Presentation& p, const Word& w) {
  SymbolSet a = alpha(p, w);
  SymbolSet out(p.rank());
  for (int s = 1; s <= p.rank(); ++s) {
    if (a.test(s)) continue;
    if (p.commuting_with(s).contains(a)) out.set(s);
  }
  return out;
}

/// A symbol x commutes with the element w iff it commutes with every
/// symbol of alpha(w); reflexively, x commutes with itself.
inline bool symbol_commutes_with(const Presentation& p, int s,
                                 const SymbolSet& a) {
  return p.commuting_with(s).contains(a);
}

}  // namespace pcg

#endif
