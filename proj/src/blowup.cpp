#include "holex/blowup.hpp"

#include "holex/errors.hpp"
#include "holex/m_invariant.hpp"

#include <stdexcept>

namespace holex {

LatticeVector BlowupMap::pull_back(const LatticeVector& x) const {
  require_dimension(base, x, "base class");
  return embedding * x;
}

BlowupMap blow_up(const IntersectionLattice& lattice) {
  const std::size_t n = lattice.rank();
  IntMatrix gram(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = lattice.gram()(i, j);
  gram(n, n) = -1;

  BlowupMap map;
  map.base = lattice;
  map.total = IntersectionLattice(std::move(gram));
  map.d_index = n;
  map.embedding = IntMatrix(n + 1, n);
  for (std::size_t i = 0; i < n; ++i) map.embedding(i, i) = 1;
  return map;
}

std::vector<BlowupMap> blow_up_tower(const IntersectionLattice& lattice, int count) {
  if (count < 0) throw DomainError("number of blow-ups must be non-negative");
  std::vector<BlowupMap> tower;
  IntersectionLattice current = lattice;
  for (int i = 0; i < count; ++i) {
    tower.push_back(blow_up(current));
    current = tower.back().total;
  }
  return tower;
}

BlowupMap as_blowup(const IntersectionLattice& total) {
  const std::size_t n = total.rank();
  if (n == 0) throw DomainError("lattice of rank 0 has no exceptional class");
  const std::size_t d = n - 1;
  if (total.gram()(d, d) != -1) throw DomainError("last basis vector does not have square -1");
  for (std::size_t i = 0; i < d; ++i)
    if (total.gram()(i, d) != 0) throw DomainError("last basis vector is not orthogonal to the base");
  IntMatrix base(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) base(i, j) = total.gram()(i, j);
  return blow_up(IntersectionLattice(std::move(base)));
}

C1Split decompose_c1(const BlowupMap& map, const LatticeVector& c1_total) {
  require_dimension(map.total, c1_total, "c1");
  C1Split split;
  split.k = -pairing(map.total, map.exceptional_class(), c1_total);
  split.base_class = LatticeVector(map.base.rank());
  for (std::size_t i = 0; i < map.base.rank(); ++i) split.base_class[i] = c1_total[i];
  return split;
}

LatticeVector reassemble_c1(const BlowupMap& map, const C1Split& split) {
  return map.pull_back(split.base_class) + split.k * map.exceptional_class();
}

TwistNormalization normalize_twist(const BlowupMap& map, const BundleTopology& bundle) {
  validate_bundle(map.total, bundle);
  const Integer k = decompose_c1(map, bundle.c1).k;
  const Integer r = bundle.rank;
  // k changes by r l under E -> E(lD), since -[D].(r l [D]) = r l.
  Integer l;
  mpz_fdiv_q(l.get_mpz_t(), k.get_mpz_t(), r.get_mpz_t());
  l = -l;

  TwistNormalization out;
  out.twist = l;
  out.bundle = twist_by_line_bundle(map.total, bundle, l * map.exceptional_class());
  if (discriminant(map.total, out.bundle) != discriminant(map.total, bundle))
    throw std::logic_error("line bundle twist changed the discriminant");
  return out;
}

Integer pushforward_delta_bound(const Integer& delta_total, int r, const Integer& k) {
  if (r < 1) throw DomainError("rank r must be at least 1");
  if (k < 0 || k >= r) throw DomainError("k must satisfy 0 <= k < r");
  return delta_total - k * (r - k);
}

BlowupInequality m_blowup_inequality_check(const BlowupMap& map, int r, const LatticeVector& a,
                                           const Integer& k) {
  if (k < 0 || k >= r) throw DomainError("k must satisfy 0 <= k < r");
  const LatticeVector c1_total = map.pull_back(a) + k * map.exceptional_class();
  const MResult base = m_compute(map.base, r, a);
  const MResult total = m_compute(map.total, r, c1_total);

  BlowupInequality out;
  out.m_base = base.integer_value();
  out.m_total = total.integer_value();
  out.bound = out.m_base + k * (r - k);
  out.holds = out.m_total <= out.bound;

  const long kk = k.get_si();
  for (std::size_t i = 0; i < base.decomposition.size(); ++i) {
    LatticeVector nu = map.pull_back(base.decomposition[i]);
    if (static_cast<long>(i) < kk) nu += map.exceptional_class();
    out.witness.push_back(std::move(nu));
  }
  out.witness_value = ratio(scaled_objective(map.total, r, c1_total, out.witness), r);
  return out;
}

PullbackInvariance pullback_invariance_check(const BlowupMap& map, const BundleTopology& bundle) {
  validate_bundle(map.base, bundle);
  BundleTopology pulled = bundle;
  pulled.c1 = map.pull_back(bundle.c1);

  PullbackInvariance out;
  out.delta_base = discriminant(map.base, bundle);
  out.delta_total = discriminant(map.total, pulled);
  out.m_base = m_compute(map.base, bundle.rank, bundle.c1).integer_value();
  out.m_total = m_compute(map.total, bundle.rank, pulled.c1).integer_value();
  out.holds = out.delta_base == out.delta_total && out.m_base == out.m_total;
  return out;
}

TransferReport pr_transfer_check(const BlowupMap& map, const std::vector<BundleTopology>& bundles) {
  TransferReport report;
  for (const auto& bundle : bundles) {
    TransferEntry e;
    const auto normalized = normalize_twist(map, bundle);
    e.normalized = normalized.bundle;
    e.twist = normalized.twist;
    e.split = decompose_c1(map, e.normalized.c1);
    const int r = e.normalized.rank;

    e.delta_total = discriminant(map.total, e.normalized);
    e.delta_pushforward = pushforward_delta_bound(e.delta_total, r, e.split.k);
    e.m_total = m_compute(map.total, r, e.normalized.c1).integer_value();
    e.m_base = m_compute(map.base, r, e.split.base_class).integer_value();
    e.lhs = e.delta_total - e.m_total;
    e.rhs = e.delta_pushforward - e.m_base;
    e.margin = e.lhs - e.rhs;
    e.holds = e.margin >= 0;
    if (!e.holds) ++report.violations;
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace holex
