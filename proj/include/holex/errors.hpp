#pragma once

#include <stdexcept>
#include <string>

namespace holex {

/// Vector or matrix sizes do not agree with the ambient lattice.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition fails: indefinite lattice (algebraic surface),
/// wrong surface kind for a criterion, out-of-range parameter.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A model or bundle description violates a structural invariant (K3 data
/// with chi(O) != 2, negative rank, ...).
class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace holex
