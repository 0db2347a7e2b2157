#pragma once

// Test-only reference computations on plain 64-bit integers. Nothing here
// calls into the library, so they serve as independent oracles.

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace brute {

using Gram = std::vector<std::vector<std::int64_t>>;
using Vec = std::vector<std::int64_t>;

inline std::int64_t form(const Gram& g, const Vec& x, const Vec& y) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * g[i][j] * y[j];
  return s;
}

struct Minimum {
  std::int64_t scaled = std::numeric_limits<std::int64_t>::max();  // min of -sum (a - r mu_i)^2
  std::vector<Vec> decomposition;
};

/// Nested scan over mu_1..mu_{r-1} in [-radius, radius]^n (original
/// coordinates), mu_r = a - sum. Visits tuples in lexicographic order, so the
/// first optimum kept is the lexicographically smallest in the box.
inline Minimum scan_m(const Gram& g, int r, const Vec& a, int radius) {
  const std::size_t n = a.size();
  Minimum best;
  std::vector<Vec> mu(static_cast<std::size_t>(r), Vec(n, 0));
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t summand, std::size_t coord) {
    if (summand + 1 == static_cast<std::size_t>(r)) {
      Vec last = a;
      for (std::size_t i = 0; i + 1 < mu.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) last[j] -= mu[i][j];
      mu.back() = last;
      std::int64_t t = 0;
      for (const auto& m : mu) {
        Vec d(n);
        for (std::size_t j = 0; j < n; ++j) d[j] = a[j] - r * m[j];
        t -= form(g, d, d);
      }
      if (t < best.scaled) {
        best.scaled = t;
        best.decomposition = mu;
      }
      return;
    }
    if (coord == n) {
      rec(summand + 1, 0);
      return;
    }
    for (std::int64_t v = -radius; v <= radius; ++v) {
      mu[summand][coord] = v;
      rec(summand, coord + 1);
    }
  };
  rec(0, 0);
  return best;
}

/// Sign scan of x.x over all nonzero x in [-bound, bound]^n:
/// 0 = every value negative, 1 = some zero and none positive, 2 = some positive.
inline int sign_scan(const Gram& g, int bound) {
  const std::size_t n = g.size();
  Vec x(n, -bound);
  bool zero = false;
  if (n == 0) return 0;
  for (;;) {
    bool nonzero = false;
    for (auto v : x) nonzero = nonzero || v != 0;
    if (nonzero) {
      const auto q = form(g, x, x);
      if (q > 0) return 2;
      if (q == 0) zero = true;
    }
    std::size_t i = 0;
    while (i < n && x[i] == bound) x[i++] = -bound;
    if (i == n) break;
    ++x[i];
  }
  return zero ? 1 : 0;
}

/// chi(E) = r chi(O) + (c1^2 - 2 c2)/2 + c1.c1(X)/2 in classical form, times 2.
inline std::int64_t twice_classical_chi(std::int64_t rank, std::int64_t chi_o, std::int64_t c1_sq, std::int64_t c2,
                                        std::int64_t c1_dot_anticanonical) {
  return 2 * rank * chi_o + (c1_sq - 2 * c2) + c1_dot_anticanonical;
}

}  // namespace brute
