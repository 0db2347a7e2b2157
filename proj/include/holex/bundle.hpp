#pragma once

#include "holex/lattice.hpp"
#include "holex/surface.hpp"

namespace holex {

/// Topological type of a complex vector bundle: rank, c_1 in NS coordinates
/// and c_2. When c1_in_ns is false the topological c_1 is not in NS(X) and
/// its coordinates carry no meaning; every criterion then answers "no".
struct BundleTopology {
  int rank = 1;
  LatticeVector c1;
  Integer c2 = 0;
  bool c1_in_ns = true;

  friend bool operator==(const BundleTopology&, const BundleTopology&) = default;
};

/// Delta(E) = 2 r c_2 - (r - 1) c_1^2.
Integer discriminant(const IntersectionLattice& lattice, const BundleTopology& bundle);

/// First Pontrjagin class of the associated PU(r)-bundle, -Delta(E).
Integer pontrjagin_p1(const IntersectionLattice& lattice, const BundleTopology& bundle);

/// For rank 2: w_2 of the PU(2)-bundle vanishes iff c_1 lies in 2 NS(X).
/// Throws DomainError for other ranks.
bool w2_vanishes(const IntersectionLattice& lattice, const BundleTopology& bundle);

struct EulerCharacteristic {
  Rational value;
  bool integral = true;
};

/// Riemann-Roch in discriminant form:
///   chi(E) = r [ chi(O_X) + c_1(E).c_1(X) / (2r) + (c_1(E)^2 - Delta(E)) / (2r^2) ].
/// A non-integral value means the data cannot come from a genuine bundle.
EulerCharacteristic euler_characteristic(const SurfaceModel& surface, const BundleTopology& bundle);

/// h^1(End_0 E) for a simple rank-2 bundle on a K3 surface, where
/// h^0 = h^2 = 0 and chi(End_0 E) = 6 - Delta. Negative means no such bundle.
Integer k3_simple_h1(const Integer& delta);

/// E tensor L for a line bundle with c_1(L) = line_class:
///   c_1' = c_1 + r l,   c_2' = c_2 + (r - 1) c_1.l + r(r - 1)/2 l^2.
BundleTopology twist_by_line_bundle(const IntersectionLattice& lattice, const BundleTopology& bundle,
                                    const LatticeVector& line_class);

/// Throws InvariantError / DimensionError on rank < 1 or a c_1 of the wrong length.
void validate_bundle(const IntersectionLattice& lattice, const BundleTopology& bundle);

}  // namespace holex
