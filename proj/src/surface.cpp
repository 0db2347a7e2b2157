#include "holex/surface.hpp"

#include "holex/errors.hpp"

namespace holex {

const char* to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::k3_nonalgebraic: return "k3";
    case SurfaceKind::class_vii_known: return "class7";
    case SurfaceKind::generic_nonalgebraic: return "generic";
  }
  return "?";
}

void SurfaceModel::validate() const {
  require_dimension(lattice, anticanonical, "anticanonical class");
  if (algebraic_dimension != 0 && algebraic_dimension != 1)
    throw InvariantError("algebraic dimension of a non-algebraic surface must be 0 or 1");
  if (kind == SurfaceKind::k3_nonalgebraic) {
    if (chi_o != 2) throw InvariantError("K3 surface requires chi_o = 2");
    if (!anticanonical.is_zero()) throw InvariantError("K3 surface requires anticanonical = 0");
    for (std::size_t i = 0; i < lattice.rank(); ++i)
      if (mpz_even_p(lattice.gram()(i, i).get_mpz_t()) == 0)
        throw InvariantError("K3 lattice must be even: odd diagonal entry at (" + std::to_string(i + 1) + "," +
                             std::to_string(i + 1) + ")");
  }
  if (!is_negative_semidefinite(lattice)) throw DomainError("lattice not negative semi-definite");
}

SurfaceModel SurfaceModel::k3(IntersectionLattice lattice, int algebraic_dimension) {
  SurfaceModel s;
  s.kind = SurfaceKind::k3_nonalgebraic;
  s.anticanonical = LatticeVector::zero(lattice.rank());
  s.lattice = std::move(lattice);
  s.chi_o = 2;
  s.algebraic_dimension = algebraic_dimension;
  return s;
}

SurfaceModel SurfaceModel::class_vii(IntersectionLattice lattice, bool vii_applicable) {
  SurfaceModel s;
  s.kind = SurfaceKind::class_vii_known;
  s.anticanonical = LatticeVector::zero(lattice.rank());
  s.lattice = std::move(lattice);
  s.chi_o = 0;
  s.vii_applicable = vii_applicable;
  return s;
}

SurfaceModel SurfaceModel::generic(IntersectionLattice lattice, Integer chi_o, LatticeVector anticanonical) {
  SurfaceModel s;
  s.kind = SurfaceKind::generic_nonalgebraic;
  s.lattice = std::move(lattice);
  s.chi_o = std::move(chi_o);
  s.anticanonical = std::move(anticanonical);
  return s;
}

}  // namespace holex
