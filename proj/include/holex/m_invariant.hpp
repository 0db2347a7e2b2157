#pragma once

#include "holex/lattice.hpp"

#include <vector>

namespace holex {

/// Optimal decomposition a = mu_1 + ... + mu_r for the invariant
///   m(r, a) = r * inf { -sum_i (a/r - mu_i)^2 }.
///
/// scaled_objective is T = -sum_i (a - r mu_i)^2 evaluated at the optimum, so
/// value = T / r. T is always divisible by r; `integral` is false only if
/// that identity is ever violated, in which case `value` keeps the exact
/// rational instead of being rounded.
struct MResult {
  Rational value;
  Integer scaled_objective;
  std::vector<LatticeVector> decomposition;
  bool integral = true;

  /// The invariant as an integer. Throws DomainError if not integral.
  Integer integer_value() const;
};

/// Exhaustive search restricted to the box of radius `radius` (sup norm,
/// quotient coordinates) around round(a/r). Every mu_i, including the
/// dependent mu_r, must lie in the box. The minimum over the box is found by
/// an exact dynamic program over partial sums, so no summand is skipped.
struct OracleResult {
  MResult result;
  /// True when every decomposition with some summand outside the box costs
  /// strictly more than the best in-box value, so the box optimum is global.
  bool certified_global = false;
  /// Lower bound on T for any decomposition leaving the box.
  Rational out_of_box_bound;
};

OracleResult m_oracle(const IntersectionLattice& lattice, int r, const LatticeVector& a, int radius);

/// Globally optimal m(r, a) by Fincke-Pohst style branch and bound on the
/// definite quotient. Throws DomainError for indefinite lattices, where m is
/// -infinity. Ties between optimal decompositions resolve to the
/// lexicographically smallest coordinate tuple (mu_1, ..., mu_r).
MResult m_compute(const IntersectionLattice& lattice, int r, const LatticeVector& a);

/// Residue of a modulo r * NS, coordinates in [0, r). m is unchanged.
LatticeVector m_translate_reduce(const IntersectionLattice& lattice, int r, const LatticeVector& a);

/// -sum_i (a - r mu_i)^2 for a decomposition of a into r summands; throws
/// DomainError if the summands do not add up to a.
Integer scaled_objective(const IntersectionLattice& lattice, int r, const LatticeVector& a,
                         const std::vector<LatticeVector>& decomposition);

/// The balanced decomposition: each mu_i is floor(a/r) plus a 0/1 correction
/// distributing the residues so that the sum is a.
std::vector<LatticeVector> balanced_decomposition(int r, const LatticeVector& a);

}  // namespace holex
