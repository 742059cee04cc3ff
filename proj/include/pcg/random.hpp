#ifndef PCG_RANDOM_HPP
#define PCG_RANDOM_HPP

#include <random>
#include <string>
#include <vector>

#include "pcg/conjugacy.hpp"
#include "pcg/divisibility.hpp"
#include "pcg/presentation.hpp"
#include "pcg/word.hpp"

namespace pcg {

using Rng = std::mt19937_64;

/// Presentation on r symbols x1..xr where each unordered pair commutes
/// independently with probability density/100.
inline Presentation random_presentation(Rng& rng, int r, int density_percent) {
  std::vector<std::string> names;
  for (int i = 1; i <= r; ++i) names.push_back("x" + std::to_string(i));
  std::uniform_int_distribution<int> d(0, 99);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j)
      if (d(rng) < density_percent) pairs.emplace_back(i, j);
  return Presentation(std::move(names), pairs);
}

inline Letter random_letter(Rng& rng, int r) {
  std::uniform_int_distribution<int> ds(1, r);
  std::uniform_int_distribution<int> de(0, 1);
  return Letter{ds(rng), de(rng) ? 1 : -1, 0};
}

/// Uniform letters, arbitrary word.
inline Word random_word(Rng& rng, const Presentation& p, size_t n) {
  std::vector<Letter> ls;
  ls.reserve(n);
  for (size_t i = 0; i < n; ++i) ls.push_back(random_letter(rng, p.rank()));
  return make_word(std::move(ls));
}

/// Geodesic word of exactly length n: uniform letters with rejection.
/// Appending x to a geodesic w stays geodesic iff x^-1 is not a right
/// divisor of w.
inline Word random_geodesic(Rng& rng, const Presentation& p, size_t n) {
  std::vector<Letter> ls;
  while (ls.size() < n) {
    Letter x = random_letter(rng, p.rank());
    bool cancels = false;
    for (size_t i = ls.size(); i-- > 0;) {
      if (ls[i].sym == x.sym) {
        cancels = ls[i].exp == -x.exp;
        break;
      }
      if (!p.commutes(ls[i].sym, x.sym)) break;
    }
    if (!cancels) ls.push_back(x);
  }
  return make_word(std::move(ls));
}

/// Cyclically reduced word of length close to n (exactly n when a retry
/// succeeds within the budget).
inline Word random_cyclically_reduced(Rng& rng, const Presentation& p,
                                      size_t n, int retries = 40) {
  Word best;
  for (int t = 0; t < retries; ++t) {
    Word w = cyclically_reduce(p, random_geodesic(rng, p, n)).word;
    if (w.size() == n) return w;
    if (w.size() > best.size()) best = w;
  }
  return best;
}

/// Word over the parabolic subgroup on Y, reduced to geodesic form.
inline Word random_parabolic_word(Rng& rng, const Presentation& p,
                                  const SymbolSet& Y, size_t n) {
  auto syms = Y.to_vector();
  if (syms.empty()) return Word();
  std::uniform_int_distribution<size_t> ds(0, syms.size() - 1);
  std::uniform_int_distribution<int> de(0, 1);
  std::vector<Letter> ls;
  for (size_t i = 0; i < n; ++i)
    ls.push_back(Letter{syms[ds(rng)], de(rng) ? 1 : -1, 0});
  return reduce_to_geodesic(p, make_word(std::move(ls)));
}

inline SymbolSet random_symbol_subset(Rng& rng, const Presentation& p,
                                      int expected_size) {
  SymbolSet s(p.rank());
  std::uniform_int_distribution<int> d(0, p.rank() - 1);
  for (int i = 0; i < expected_size; ++i) s.set(1 + d(rng) % p.rank());
  return s;
}

}  // namespace pcg

#endif
