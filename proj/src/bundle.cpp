#include "holex/bundle.hpp"

#include "holex/errors.hpp"

namespace holex {

void validate_bundle(const IntersectionLattice& lattice, const BundleTopology& bundle) {
  if (bundle.rank < 1) throw InvariantError("bundle rank must be at least 1");
  require_dimension(lattice, bundle.c1, "c1");
}

Integer discriminant(const IntersectionLattice& lattice, const BundleTopology& bundle) {
  validate_bundle(lattice, bundle);
  const Integer r = bundle.rank;
  return 2 * r * bundle.c2 - (r - 1) * square(lattice, bundle.c1);
}

Integer pontrjagin_p1(const IntersectionLattice& lattice, const BundleTopology& bundle) {
  return -discriminant(lattice, bundle);
}

bool w2_vanishes(const IntersectionLattice& lattice, const BundleTopology& bundle) {
  if (bundle.rank != 2) throw DomainError("w2 test applies to rank-2 bundles only");
  validate_bundle(lattice, bundle);
  return in_scaled_sublattice(lattice, bundle.c1, 2);
}

EulerCharacteristic euler_characteristic(const SurfaceModel& surface, const BundleTopology& bundle) {
  const auto& lattice = surface.lattice;
  require_dimension(lattice, surface.anticanonical, "anticanonical class");
  const Integer r = bundle.rank;
  const Integer delta = discriminant(lattice, bundle);
  const Integer c1_sq = square(lattice, bundle.c1);
  const Integer c1_dot_k = pairing(lattice, bundle.c1, surface.anticanonical);

  Rational chi = Rational(surface.chi_o) + ratio(c1_dot_k, 2 * r) + ratio(c1_sq - delta, 2 * r * r);
  chi *= Rational(r);
  return {chi, chi.get_den() == 1};
}

Integer k3_simple_h1(const Integer& delta) { return delta - 6; }

BundleTopology twist_by_line_bundle(const IntersectionLattice& lattice, const BundleTopology& bundle,
                                    const LatticeVector& line_class) {
  validate_bundle(lattice, bundle);
  require_dimension(lattice, line_class, "line bundle class");
  const Integer r = bundle.rank;
  BundleTopology out = bundle;
  out.c1 = bundle.c1 + r * line_class;
  out.c2 = bundle.c2 + (r - 1) * pairing(lattice, bundle.c1, line_class) +
           r * (r - 1) / 2 * square(lattice, line_class);
  return out;
}

}  // namespace holex
