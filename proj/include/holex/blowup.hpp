#pragma once

#include "holex/bundle.hpp"
#include "holex/lattice.hpp"

#include <vector>

namespace holex {

/// A single blow-up pi: X~ -> X on the level of Neron-Severi lattices:
/// NS(X~) = NS(X) (+) Z[D] with [D]^2 = -1, the exceptional class appended as
/// the last basis vector, and pi^* the coordinate inclusion.
struct BlowupMap {
  IntersectionLattice base;
  IntersectionLattice total;
  std::size_t d_index = 0;
  IntMatrix embedding;  // total.rank() x base.rank()

  LatticeVector pull_back(const LatticeVector& x) const;
  LatticeVector exceptional_class() const { return LatticeVector::unit(total.rank(), d_index); }
};

BlowupMap blow_up(const IntersectionLattice& lattice);

/// Proper modification as a tower of `count` single blow-ups; element i maps
/// the (i+1)-fold blow-up onto the i-fold one.
std::vector<BlowupMap> blow_up_tower(const IntersectionLattice& lattice, int count);

/// Reads `total` as a blow-up whose exceptional class is its last basis
/// vector. Throws DomainError unless that vector has square -1 and is
/// orthogonal to the rest of the basis.
BlowupMap as_blowup(const IntersectionLattice& total);

/// c_1 = pi^* a + k [D] with k = -[D].c_1.
struct C1Split {
  LatticeVector base_class;
  Integer k = 0;
};

C1Split decompose_c1(const BlowupMap& map, const LatticeVector& c1_total);
LatticeVector reassemble_c1(const BlowupMap& map, const C1Split& split);

struct TwistNormalization {
  BundleTopology bundle;  // E tensor O(l D)
  Integer twist = 0;      // l
};

/// Twists by O(lD) so that k lands in [0, r). Delta is unchanged.
TwistNormalization normalize_twist(const BlowupMap& map, const BundleTopology& bundle);

/// Upper bound Delta(E) - k(r - k) on Delta(pi_* E) from chi(E) <= chi(pi_* E).
/// Throws DomainError unless 0 <= k < r.
Integer pushforward_delta_bound(const Integer& delta_total, int r, const Integer& k);

struct BlowupInequality {
  Integer m_base = 0;
  Integer m_total = 0;
  Integer bound = 0;  // m_base + k(r - k)
  bool holds = false;
  /// The explicit decomposition nu_i = pi^* mu_i^0 + [D] (i <= k),
  /// nu_i = pi^* mu_i^0 (i > k) built from an optimal base decomposition, and
  /// its value; it equals `bound` exactly.
  std::vector<LatticeVector> witness;
  Rational witness_value;
};

/// m(r, pi^* a + k[D]) <= m(r, a) + k(r - k) over the blown-up lattice.
BlowupInequality m_blowup_inequality_check(const BlowupMap& map, int r, const LatticeVector& a,
                                           const Integer& k);

struct PullbackInvariance {
  Integer delta_base = 0;
  Integer delta_total = 0;
  Integer m_base = 0;
  Integer m_total = 0;
  bool holds = false;
};

/// Delta(pi^* F) = Delta(F) and m(r, pi^* c_1(F)) = m(r, c_1(F)).
PullbackInvariance pullback_invariance_check(const BlowupMap& map, const BundleTopology& bundle);

struct TransferEntry {
  BundleTopology normalized;
  Integer twist = 0;
  C1Split split;
  Integer delta_total = 0;
  Integer delta_pushforward = 0;  // extremal value allowed by the Delta bound
  Integer m_total = 0;
  Integer m_base = 0;
  Integer lhs = 0;     // Delta(E) - m(r, c_1(E))
  Integer rhs = 0;     // Delta(pi_* E) - m(r, c_1(pi_* E))
  Integer margin = 0;  // lhs - rhs = m_base + k(r - k) - m_total
  bool holds = false;
};

struct TransferReport {
  std::vector<TransferEntry> entries;
  std::size_t violations = 0;
};

/// Checks Delta(E) - m(r, c_1(E)) >= Delta(pi_* E) - m(r, c_1(pi_* E)) with
/// Delta(pi_* E) taken at the extremal value of the pushforward bound.
TransferReport pr_transfer_check(const BlowupMap& map, const std::vector<BundleTopology>& bundles);

}  // namespace holex
