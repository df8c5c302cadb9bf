#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "ncfapprox/quad.hpp"

// Independent reference computations used by the tests. Nothing here calls
// the library's own evaluation paths.
namespace oracle {

using ncfapprox::Integer;
using ncfapprox::QuadNum;

inline long double approx(const QuadNum& x) {
  const long double a = x.a().get_d();
  const long double b = x.b().get_d();
  const long double d = x.radicand().get_d();
  const long double c = x.c().get_d();
  if ((a > 0) == (b > 0) || x.b() == 0) return (a + b * std::sqrt(d)) / c;
  // opposite signs cancel; divide the exact norm by the conjugate instead
  const Integer norm = x.a() * x.a() - x.b() * x.b() * x.radicand();
  return norm.get_d() / (c * (a - b * std::sqrt(d)));
}

// [0; w1, w2, ...]^- by iterating the periodic word from a far tail.
inline long double ncf_periodic(const std::vector<long>& pre, const std::vector<long>& period,
                                int reps = 60) {
  long double x = 0;
  for (int r = 0; r < reps; ++r) {
    for (auto it = period.rbegin(); it != period.rend(); ++it) x = 1.0L / (*it - x);
  }
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) x = 1.0L / (*it - x);
  return x;
}

// Random periodic word over [lo, hi] with at least one entry above 2.
inline std::vector<long> random_word(std::mt19937& rng, std::size_t max_len, long lo, long hi) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<long> term(lo, hi);
  std::vector<long> w(len(rng));
  for (auto& a : w) a = term(rng);
  if (lo <= 2) {
    bool all_two = true;
    for (long a : w) all_two = all_two && a == 2;
    if (all_two) w[0] = 3;
  }
  return w;
}

// min over lo <= |n| < hi of |n| * ||n alpha - gamma||.
inline long double scan_min(long double alpha, long double gamma, long lo, long hi) {
  long double best = std::numeric_limits<long double>::infinity();
  for (long n = lo; n < hi; ++n) {
    for (long s : {n, -n}) {
      const long double x = s * alpha - gamma;
      best = std::min(best, n * std::fabs(x - std::round(x)));
    }
  }
  return best;
}

// Tails alpha_i = [0; a_{i+1}, a_{i+2}, ...]^- of a purely periodic word, i = 0..m-1.
inline std::vector<long double> periodic_tails(const std::vector<long>& period) {
  std::vector<long double> tails(period.size());
  for (std::size_t i = 0; i < period.size(); ++i) {
    std::vector<long> rot(period.begin() + static_cast<long>(i), period.end());
    rot.insert(rot.end(), period.begin(), period.begin() + static_cast<long>(i));
    tails[i] = ncf_periodic({}, rot);
  }
  return tails;
}

// gamma = sum_i b_i D_{i-1} for a purely periodic word and a periodic digit
// pattern b (length a multiple of the word length), t_i = 2 b_i - a_i + 2.
inline long double gamma_from_t(const std::vector<long>& period, const std::vector<long>& t) {
  const auto tails = periodic_tails(period);
  const std::size_t m = period.size();
  long double d = tails[0], g = 0;  // D_0 = alpha
  for (std::size_t i = 0; i < 200 * t.size() && d > 1e-30L; ++i) {
    const long a = period[i % m];
    g += static_cast<long double>((t[i % t.size()] + a - 2) / 2) * d;
    d *= tails[(i + 1) % m];
  }
  return g;
}

// Exhaustive maximum over purely periodic t-patterns (length of the word,
// |t_i| <= min(cap, a_i - 2), same parity as a_i, lattice patterns skipped) of
// min over residues and j of the s-values, with d-values from truncated series.
inline long double exhaustive_rho(const std::vector<long>& w, long cap) {
  const std::size_t n = w.size();
  std::vector<long double> af(n), ab(n);
  const auto tails = periodic_tails(w);
  std::vector<long> rev(w.rbegin(), w.rend());
  const auto rev_tails = periodic_tails(rev);
  for (std::size_t r = 0; r < n; ++r) {
    af[r] = tails[(r + 1) % n];
    // reversed word read from position r backwards: a_r, a_{r-1}, ...
    ab[r] = rev_tails[n - 1 - r];
  }
  std::vector<std::vector<long>> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (long t = -cap; t <= cap; ++t) {
      if ((t - w[i]) % 2 == 0 && std::abs(t) <= w[i] - 2) c[i].push_back(t);
    }
    if (c[i].empty()) return -1;
  }
  std::vector<std::size_t> idx(n, 0);
  std::vector<long> t(n);
  long double best = -1;
  while (true) {
    bool all_min = true, all_max = true;
    for (std::size_t i = 0; i < n; ++i) {
      t[i] = c[i][idx[i]];
      all_min = all_min && t[i] == 2 - w[i];
      all_max = all_max && t[i] == w[i] - 2;
    }
    if (!all_min && !all_max) {
      long double v = std::numeric_limits<long double>::infinity();
      for (std::size_t r = 0; r < n; ++r) {
        long double dm = 0, dp = 0, p = 1;
        for (std::size_t h = 0; h < 40 * n; ++h) {
          const std::size_t i = (r + 40 * n - h) % n;
          p *= ab[i];
          dm += p * t[i];
        }
        p = 1;
        for (std::size_t h = 1; h <= 40 * n; ++h) {
          p *= af[(r + h - 1) % n];
          dp += p * t[(r + h) % n];
        }
        const long double a = ab[r], f = af[r], den = 4 * (1 - a * f);
        const long double s = std::min(std::min((1 - a + dm) * (1 - f + dp), (1 + a + dm) * (1 + f - dp)),
                                       std::min((1 - a - dm) * (1 - f - dp), (1 + a - dm) * (1 + f + dp)));
        v = std::min(v, s / den);
      }
      best = std::max(best, v);
    }
    std::size_t k = 0;
    while (k < n && ++idx[k] == c[k].size()) idx[k++] = 0;
    if (k == n) break;
  }
  return best;
}

}  // namespace oracle
