#pragma once

#include "holex/lattice.hpp"

#include <cstdint>
#include <limits>
#include <random>

namespace holex {

/// Seeded generator whose draws are identical on every platform:
/// std::mt19937_64 is fully specified, and bounded draws use rejection
/// sampling instead of the implementation-defined distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  bool coin() { return uniform(0, 1) == 1; }

  LatticeVector vector(std::size_t n, std::int64_t lo, std::int64_t hi) {
    LatticeVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<long>(uniform(lo, hi));
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

/// Symmetric Gram matrix of rank in [min_rank, max_rank] with entries in
/// [lo, hi], redrawn until the form is negative semi-definite.
inline IntersectionLattice random_semidefinite_lattice(Rng& rng, std::size_t min_rank, std::size_t max_rank,
                                                       std::int64_t lo, std::int64_t hi) {
  for (;;) {
    const auto n = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(min_rank),
                                                        static_cast<std::int64_t>(max_rank)));
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = static_cast<long>(rng.uniform(lo, hi));
    IntersectionLattice lattice(std::move(g));
    if (is_negative_semidefinite(lattice)) return lattice;
  }
}

}  // namespace holex
