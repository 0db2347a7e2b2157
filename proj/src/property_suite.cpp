#include "holex/property_suite.hpp"

#include "holex/blowup.hpp"
#include "holex/bundle.hpp"
#include "holex/existence.hpp"
#include "holex/m_invariant.hpp"
#include "holex/random.hpp"

#include <map>

namespace holex {

std::size_t SuiteReport::total_violations() const {
  std::size_t n = 0;
  for (const auto& p : properties) n += p.violations;
  return n;
}

namespace {

class Tallies {
 public:
  void record(const std::string& name, bool ok) {
    auto& t = index(name);
    ++t.checked;
    if (!ok) ++t.violations;
  }
  std::vector<PropertyTally> release() { return std::move(order_); }

 private:
  PropertyTally& index(const std::string& name) {
    auto it = position_.find(name);
    if (it == position_.end()) {
      it = position_.emplace(name, order_.size()).first;
      order_.push_back({name, 0, 0});
    }
    return order_[it->second];
  }
  std::map<std::string, std::size_t> position_;
  std::vector<PropertyTally> order_;
};

bool zero_law_predicate(const IntersectionLattice& lattice, int r, const LatticeVector& a) {
  const QuotientData q = radical_and_quotient(lattice);
  for (const auto& c : q.project(a))
    if (mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(r)) == 0) return false;
  return true;
}

bool same_answers(const Verdict& x, const Verdict& y) {
  return x.holomorphic == y.holomorphic && x.filtrable == y.filtrable && x.delta == y.delta &&
         x.m_value == y.m_value;
}

}  // namespace

SuiteReport run_property_suite(std::uint64_t seed, const SuiteOptions& options) {
  Rng rng(seed);
  Tallies t;

  for (std::size_t iter = 0; iter < options.instances; ++iter) {
    const IntersectionLattice lattice = random_semidefinite_lattice(rng, 1, 3, -4, 0);
    const int r = static_cast<int>(rng.uniform(2, 4));
    const LatticeVector a = rng.vector(lattice.rank(), -2, 2);

    const MResult m = m_compute(lattice, r, a);
    const OracleResult oracle = m_oracle(lattice, r, a, options.oracle_radius);
    if (oracle.certified_global) t.record("oracle_agreement", oracle.result.value == m.value);
    t.record("integrality", m.integral && m.value >= 0 && m.scaled_objective == m.value * r);

    const LatticeVector lambda = rng.vector(lattice.rank(), -3, 3);
    t.record("translation_invariance", m_compute(lattice, r, a + Integer(r) * lambda).value == m.value);
    t.record("zero_law", (m.value == 0) == zero_law_predicate(lattice, r, a));
    t.record("seed_bound", m.scaled_objective <= scaled_objective(lattice, r, a, balanced_decomposition(r, a)));

    const BlowupMap map = blow_up(lattice);
    const Integer k = rng.uniform(0, r - 1);
    const BlowupInequality ineq = m_blowup_inequality_check(map, r, a, k);
    t.record("blowup_inequality", ineq.holds && ineq.witness_value == Rational(ineq.bound));
    if (k == 0) t.record("blowup_k0_equality", ineq.m_total == ineq.m_base);

    BundleTopology base_bundle{r, a, Integer(rng.uniform(-3, 3)), true};
    t.record("pullback_invariance", pullback_invariance_check(map, base_bundle).holds);

    const LatticeVector c1_total = rng.vector(map.total.rank(), -6, 6);
    t.record("c1_round_trip", reassemble_c1(map, decompose_c1(map, c1_total)) == c1_total);

    BundleTopology total_bundle{r, c1_total, Integer(rng.uniform(-4, 4)), true};
    const TwistNormalization normalized = normalize_twist(map, total_bundle);
    const auto k_after = decompose_c1(map, normalized.bundle.c1).k;
    const SurfaceModel vii = SurfaceModel::class_vii(map.total, true);
    const Verdict before = decide(vii, total_bundle);
    const Verdict after = decide(vii, normalized.bundle);
    t.record("twist_invariance", k_after >= 0 && k_after < r && same_answers(before, after));

    const Integer delta = discriminant(lattice, base_bundle);
    const Integer c1_sq = square(lattice, a);
    const Integer residue = delta + (r - 1) * c1_sq;
    t.record("delta_parity", mpz_divisible_ui_p(residue.get_mpz_t(), static_cast<unsigned long>(2 * r)) != 0);

    const Verdict v = decide(SurfaceModel::class_vii(lattice, true), base_bundle);
    t.record("class_vii_equivalence",
             v.holomorphic == v.filtrable && ((v.holomorphic == Answer::yes) == (delta >= m.value)));
    const Verdict g = decide(SurfaceModel::generic(lattice, 0, LatticeVector::zero(lattice.rank())), base_bundle);
    t.record("verdict_coherence", g.filtrable != Answer::yes || g.holomorphic == Answer::yes);
  }

  SuiteReport report;
  report.seed = seed;
  report.instances = options.instances;
  report.properties = t.release();
  return report;
}

}  // namespace holex
