#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace holex {

struct PropertyTally {
  std::string name;
  std::size_t checked = 0;
  std::size_t violations = 0;
};

struct SuiteOptions {
  std::size_t instances = 40;
  int oracle_radius = 4;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::size_t instances = 0;
  std::vector<PropertyTally> properties;

  std::size_t total_violations() const;
};

/// Seeded randomized run of the library's invariants: oracle agreement and
/// integrality of m, translation invariance, the zero law, the blow-up
/// inequality and pullback equalities, the c_1 round trip, twist
/// invariance, Delta parity and verdict coherence. Output is a pure function
/// of (seed, options).
SuiteReport run_property_suite(std::uint64_t seed, const SuiteOptions& options = {});

}  // namespace holex
