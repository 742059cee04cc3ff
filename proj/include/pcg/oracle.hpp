#ifndef PCG_ORACLE_HPP
#define PCG_ORACLE_HPP

#include <cstdlib>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "pcg/conjugacy.hpp"
#include "pcg/presentation.hpp"
#include "pcg/rewrite.hpp"
#include "pcg/word.hpp"

namespace pcg::oracle {

/// Raised when an input exceeds the oracle's hard caps.  The oracles are
/// correctness anchors for small instances, not production paths.
class limit_error : public std::runtime_error {
public:
  explicit limit_error(const std::string& what) : std::runtime_error(what) {}
};

struct Limits {
  size_t max_length = 10;
  int max_rank = 5;
  size_t max_class_size = 1000000;
};

inline Limits current_limits() {
  Limits l;
  if (const char* e = std::getenv("PCG_ORACLE_MAX_LENGTH"))
    l.max_length = size_t(std::atoll(e));
  if (const char* e = std::getenv("PCG_ORACLE_MAX_CLASS"))
    l.max_class_size = size_t(std::atoll(e));
  return l;
}

/// All geodesic words for the element of w: breadth-first closure of the
/// geodesic form under adjacent commuting transpositions.  Two letters
/// swap only when their symbols are distinct and commute.
inline std::set<Word> enumerate_geodesics(const Presentation& p, const Word& w,
                                          const Limits& lim = current_limits()) {
  Word g = reduce_to_geodesic(p, w);
  if (g.size() > lim.max_length)
    throw limit_error("enumerate_geodesics: length bound exceeded");
  std::set<Word> seen{g};
  std::deque<Word> frontier{g};
  while (!frontier.empty()) {
    Word cur = frontier.front();
    frontier.pop_front();
    for (size_t i = 0; i + 1 < cur.size(); ++i) {
      const Letter &a = cur[i], &b = cur[i + 1];
      if (a.sym == b.sym || !p.commutes(a.sym, b.sym)) continue;
      Word nxt = cur;
      std::swap(nxt.letters[i], nxt.letters[i + 1]);
      if (seen.insert(nxt).second) {
        if (seen.size() > lim.max_class_size)
          throw limit_error("enumerate_geodesics: class size bound exceeded");
        frontier.push_back(nxt);
      }
    }
  }
  return seen;
}

enum class OrderKind { ShortLex, Prec };

/// Minimum of the geodesic class under the chosen order; the reference for
/// both normal form algorithms.
inline Word bruteforce_min(const Presentation& p, const Word& w,
                           OrderKind order,
                           const Limits& lim = current_limits()) {
  auto cls = enumerate_geodesics(p, w, lim);
  const Word* best = nullptr;
  for (const auto& cand : cls) {
    if (!best) {
      best = &cand;
      continue;
    }
    int c = order == OrderKind::ShortLex ? shortlex_compare(p, cand, *best)
                                         : prec_compare(p, cand, *best);
    if (c < 0) best = &cand;
  }
  return best ? *best : Word();
}

/// Oracle element equality: same geodesic class.
inline bool equal_elements(const Presentation& p, const Word& u, const Word& v,
                           const Limits& lim = current_limits()) {
  Word ug = reduce_to_geodesic(p, u);
  Word vg = reduce_to_geodesic(p, v);
  if (ug.size() != vg.size()) return false;
  auto cls = enumerate_geodesics(p, ug, lim);
  return cls.count(vg) > 0;
}

/// CR(w): cyclically reduce, then close under length-preserving
/// conjugations by single letters.  Keys are ShortLex normal forms.
inline std::set<Word> cr_set(const Presentation& p, const Word& w,
                             const Limits& lim = current_limits()) {
  Word start = shortlex_normalize(p, cyclically_reduce(p, kb_normalize(p, w)).word);
  if (start.size() > lim.max_length)
    throw limit_error("cr_set: length bound exceeded");
  std::set<Word> seen{start};
  std::deque<Word> frontier{start};
  while (!frontier.empty()) {
    Word cur = frontier.front();
    frontier.pop_front();
    for (int s = 1; s <= p.rank(); ++s) {
      for (int e : {1, -1}) {
        Word z = make_word({Letter{s, e, 0}});
        Word conj = reduce_to_geodesic(p, conjugate_word(cur, z));
        if (conj.size() != cur.size()) continue;
        Word key = shortlex_normalize(p, conj);
        if (seen.insert(key).second) {
          if (seen.size() > lim.max_class_size)
            throw limit_error("cr_set: class size bound exceeded");
          frontier.push_back(key);
        }
      }
    }
  }
  return seen;
}

inline bool bruteforce_conjugate(const Presentation& p, const Word& u,
                                 const Word& v,
                                 const Limits& lim = current_limits()) {
  Word vc = shortlex_normalize(p, cyclically_reduce(p, kb_normalize(p, v)).word);
  auto cls = cr_set(p, u, lim);
  return cls.count(vc) > 0;
}

/// All left divisors of w: elements arising as prefixes of members of the
/// geodesic class, keyed by ShortLex normal form.
inline std::set<Word> bruteforce_divisors(const Presentation& p, const Word& w,
                                          const Limits& lim = current_limits()) {
  auto cls = enumerate_geodesics(p, w, lim);
  std::set<Word> out;
  for (const auto& g : cls) {
    for (size_t len = 0; len <= g.size(); ++len) {
      Word prefix(std::vector<Letter>(g.letters.begin(),
                                      g.letters.begin() + ptrdiff_t(len)));
      out.insert(shortlex_normalize(p, prefix));
    }
  }
  return out;
}

}  // namespace pcg::oracle

#endif
