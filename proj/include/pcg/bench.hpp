#ifndef PCG_BENCH_HPP
#define PCG_BENCH_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pcg/conjugacy.hpp"
#include "pcg/divisibility.hpp"
#include "pcg/random.hpp"
#include "pcg/rewrite.hpp"

namespace pcg {

struct BenchConfig {
  uint64_t seed = 20240601;
  int rank = 8;
  int density_percent = 50;  // commutation probability for the test group
  std::vector<size_t> sizes = {64, 128, 256, 512, 1024};
  int samples = 50;
};

struct BenchSeries {
  std::vector<size_t> sizes;
  std::vector<double> mean_metric;
  std::vector<long long> max_metric;
  std::vector<double> mean_basic;
};

struct BenchCheck {
  std::string name;
  std::string bound_text;
  bool hard = false;          // per-sample bound (vs fitted exponent)
  double fitted_exponent = 0;
  double exponent_limit = 0;
  bool pass = false;
  BenchSeries series;
};

struct BenchReport {
  BenchConfig config;
  std::vector<BenchCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {

/// Least-squares slope of log(mean) against log(n).
inline double loglog_slope(const std::vector<size_t>& sizes,
                           const std::vector<double>& means) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = double(sizes.size());
  for (size_t i = 0; i < sizes.size(); ++i) {
    double x = std::log(double(sizes[i]));
    double y = std::log(std::max(means[i], 1.0));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

/// Random left divisor of w: greedily include eligible letters with
/// probability 1/2.
inline Word random_left_divisor(Rng& rng, const Presentation& p,
                                const Word& w) {
  SymbolSet blocked(p.rank());
  std::vector<Letter> ls;
  std::uniform_int_distribution<int> coin(0, 1);
  for (const auto& l : w.letters) {
    if (!blocked.test(l.sym) && coin(rng)) {
      ls.push_back(l);
    } else {
      blocked.set(l.sym);
      blocked |= p.non_commuting_with(l.sym);
    }
  }
  return make_word(std::move(ls));
}

}  // namespace detail

/// Runs the operation-count validation suite.  Every check either enforces
/// an explicit per-sample bound on the elementary-operation count or fits
/// a log-log growth exponent against the expected asymptotic class.
inline BenchReport run_bench(const BenchConfig& cfg) {
  BenchReport rep;
  rep.config = cfg;
  Rng seed_rng(cfg.seed);
  Presentation p = random_presentation(seed_rng, cfg.rank, cfg.density_percent);
  const long long r = cfg.rank;

  struct HardCase {
    std::string name;
    std::string bound_text;
    std::function<long long(size_t)> limit;
    std::function<long long(Rng&, size_t)> run;  // returns elementary count
  };

  std::vector<HardCase> hard = {
      {"normalize_geodesic", "elementary <= 2n",
       [](size_t n) { return 2LL * (long long)n; },
       [&](Rng& rng, size_t n) {
         OpCounter c;
         kb_normalize(p, random_geodesic(rng, p, n), &c);
         return c.elementary;
       }},
      {"chain_decomposition", "elementary <= 3rn",
       [r](size_t n) { return 3LL * r * (long long)n; },
       [&](Rng& rng, size_t n) {
         OpCounter c;
         chain_decomposition(p, random_geodesic(rng, p, n), &c);
         return c.elementary;
       }},
      {"gcd_of_divisors", "elementary <= 4n",
       [](size_t n) { return 4LL * (long long)n; },
       [&](Rng& rng, size_t n) {
         Word w = random_geodesic(rng, p, n);
         Word u = detail::random_left_divisor(rng, p, w);
         Word v = detail::random_left_divisor(rng, p, w);
         OpCounter c;
         gcd_lm_of_divisors(p, u, v, w, &c);
         return c.elementary;
       }},
      {"parabolic_divisor", "elementary <= (3r+1)n",
       [r](size_t n) { return (3LL * r + 1) * (long long)n; },
       [&](Rng& rng, size_t n) {
         OpCounter c;
         SymbolSet y = random_symbol_subset(rng, p, p.rank() / 2);
         parabolic_gd(p, random_geodesic(rng, p, n), y, &c);
         return c.elementary;
       }},
  };

  for (auto& hc : hard) {
    BenchCheck chk;
    chk.name = hc.name;
    chk.bound_text = hc.bound_text;
    chk.hard = true;
    chk.pass = true;
    Rng rng(cfg.seed ^ std::hash<std::string>{}(hc.name));
    for (size_t n : cfg.sizes) {
      double sum = 0;
      long long worst = 0;
      for (int s = 0; s < cfg.samples; ++s) {
        long long el = hc.run(rng, n);
        sum += double(el);
        worst = std::max(worst, el);
        if (el > hc.limit(n)) chk.pass = false;
      }
      chk.series.sizes.push_back(n);
      chk.series.mean_metric.push_back(sum / cfg.samples);
      chk.series.max_metric.push_back(worst);
      chk.series.mean_basic.push_back(0);
    }
    rep.checks.push_back(std::move(chk));
  }

  struct SoftCase {
    std::string name;
    std::string bound_text;
    double limit;
    std::function<long long(Rng&, size_t)> run;  // returns the fitted metric
  };

  std::vector<SoftCase> soft = {
      {"cyclic_reduction", "fitted elementary exponent <= 2.2", 2.2,
       [&](Rng& rng, size_t n) {
         // conjugated inputs so that several reduction rounds are needed
         Word core = random_geodesic(rng, p, std::max<size_t>(2, n / 2));
         Word z = random_geodesic(rng, p, n / 4);
         Word w = reduce_to_geodesic(p, conjugate_word(core, z));
         OpCounter c;
         cyclically_reduce(p, w, &c);
         return c.elementary;
       }},
      {"conjugacy_cyclically_reduced", "fitted basic exponent <= 2.3", 2.3,
       [&](Rng& rng, size_t n) {
         Word u = random_cyclically_reduced(rng, p, n);
         Word z = random_word(rng, p, n / 4);
         Word v = cyclically_reduce(p, kb_normalize(p, conjugate_word(u, z))).word;
         OpCounter c;
         are_conjugate(p, u, v, &c);
         return c.basic_total();
       }},
      {"conjugacy_full", "fitted basic exponent <= 3.3", 3.3,
       [&](Rng& rng, size_t n) {
         Word u = random_word(rng, p, n);
         Word v;
         std::uniform_int_distribution<int> coin(0, 1);
         if (coin(rng)) {
           v = conjugate_word(u, random_word(rng, p, n / 4));
         } else {
           v = random_word(rng, p, n);
         }
         OpCounter c;
         are_conjugate(p, u, v, &c);
         return c.basic_total();
       }},
  };

  for (auto& sc : soft) {
    BenchCheck chk;
    chk.name = sc.name;
    chk.bound_text = sc.bound_text;
    chk.hard = false;
    chk.exponent_limit = sc.limit;
    Rng rng(cfg.seed ^ std::hash<std::string>{}(sc.name));
    for (size_t n : cfg.sizes) {
      double sum = 0;
      long long worst = 0;
      for (int s = 0; s < cfg.samples; ++s) {
        long long m = sc.run(rng, n);
        sum += double(m);
        worst = std::max(worst, m);
      }
      chk.series.sizes.push_back(n);
      chk.series.mean_metric.push_back(sum / cfg.samples);
      chk.series.max_metric.push_back(worst);
      chk.series.mean_basic.push_back(sum / cfg.samples);
    }
    chk.fitted_exponent =
        detail::loglog_slope(chk.series.sizes, chk.series.mean_metric);
    chk.pass = chk.fitted_exponent <= chk.exponent_limit;
    rep.checks.push_back(std::move(chk));
  }

  return rep;
}

}  // namespace pcg

#endif
