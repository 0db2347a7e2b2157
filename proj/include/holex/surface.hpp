#pragma once

#include "holex/lattice.hpp"

#include <string>

namespace holex {

enum class SurfaceKind {
  k3_nonalgebraic,
  class_vii_known,
  generic_nonalgebraic,
};

const char* to_string(SurfaceKind kind);

/// Topological model of a compact non-algebraic surface as seen by the
/// existence criteria: NS(X) with its intersection form, chi(O_X), the
/// anticanonical class c_1(X) in NS coordinates, the algebraic dimension and,
/// for class VII, whether the minimal model has b_2 = 0 or contains a cycle
/// of rational curves.
struct SurfaceModel {
  SurfaceKind kind = SurfaceKind::generic_nonalgebraic;
  IntersectionLattice lattice;
  Integer chi_o = 0;
  LatticeVector anticanonical;
  int algebraic_dimension = 0;
  bool vii_applicable = false;

  /// Throws DomainError if the lattice is not negative semi-definite,
  /// DimensionError/InvariantError for the other invariants.
  void validate() const;

  friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;

  static SurfaceModel k3(IntersectionLattice lattice, int algebraic_dimension);
  static SurfaceModel class_vii(IntersectionLattice lattice, bool vii_applicable);
  static SurfaceModel generic(IntersectionLattice lattice, Integer chi_o, LatticeVector anticanonical);
};

}  // namespace holex
