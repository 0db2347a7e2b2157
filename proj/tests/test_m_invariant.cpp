#include <doctest.h>

#include "holex/errors.hpp"
#include "holex/m_invariant.hpp"
#include "holex/random.hpp"
#include "test_util.hpp"

#include <algorithm>

using namespace holex;
using holex::test::lattice;
using holex::test::to_gram;
using holex::test::to_vec;

namespace {

std::vector<LatticeVector> decomposition(std::initializer_list<LatticeVector> d) { return d; }

}  // namespace

TEST_CASE("frozen values agree with the nested-loop scan") {
  // gram [[-2]], r = 2, a = e
  auto s = brute::scan_m({{-2}}, 2, {1}, 3);
  CHECK(s.scaled == 4);
  CHECK(s.decomposition == std::vector<brute::Vec>{{0}, {1}});
  // gram [[-1]] (blown-up Hopf), r = 2, a = D
  s = brute::scan_m({{-1}}, 2, {1}, 3);
  CHECK(s.scaled == 2);
  CHECK(s.decomposition == std::vector<brute::Vec>{{0}, {1}});
  // gram [[-1]], r = 3, a = D: deviations (D/3, D/3, -2D/3), 3 (1 + 1 + 4) / 9 = 2
  s = brute::scan_m({{-1}}, 3, {1}, 3);
  CHECK(s.scaled == 6);
  CHECK(s.decomposition == std::vector<brute::Vec>{{0}, {0}, {1}});
  // gram [[-2]], r = 2, a = 2e
  s = brute::scan_m({{-2}}, 2, {2}, 3);
  CHECK(s.scaled == 0);
  CHECK(s.decomposition == std::vector<brute::Vec>{{1}, {1}});
}

TEST_CASE("m_oracle examples") {
  auto o = m_oracle(lattice({{-2}}), 2, {1}, 3);
  CHECK(o.result.value == 2);
  CHECK(o.result.decomposition == decomposition({{0}, {1}}));
  CHECK(o.certified_global);

  o = m_oracle(lattice({{-1}}), 2, {1}, 3);
  CHECK(o.result.value == 1);
  CHECK(o.result.decomposition == decomposition({{0}, {1}}));

  const auto l = lattice({{-2, 1, 0}, {1, -3, 0}, {0, 0, -1}});
  for (int r = 1; r <= 4; ++r) {
    o = m_oracle(l, r, LatticeVector::zero(3), 2);
    CHECK(o.result.value == 0);
    CHECK(o.result.decomposition == std::vector<LatticeVector>(static_cast<std::size_t>(r), LatticeVector::zero(3)));
  }
  CHECK_THROWS_AS(m_oracle(lattice({{1}}), 2, {1}, 3), DomainError);
  CHECK_THROWS_AS(m_oracle(lattice({{-1}}), 2, {1}, 0), DomainError);
}

TEST_CASE("m_compute examples") {
  auto m = m_compute(lattice({{-2}}), 2, {1});
  CHECK(m.value == 2);
  CHECK(m.scaled_objective == 4);
  CHECK(m.decomposition == decomposition({{0}, {1}}));

  m = m_compute(lattice({{-1}}), 3, {1});
  CHECK(m.value == 2);
  CHECK(m.decomposition == decomposition({{0}, {0}, {1}}));

  m = m_compute(lattice({{-2}}), 2, {2});
  CHECK(m.value == 0);
  CHECK(m.decomposition == decomposition({{1}, {1}}));

  m = m_compute(lattice({{-1}}), 2, {1});
  CHECK(m.value == 1);
  CHECK(m.decomposition == decomposition({{0}, {1}}));
}

TEST_CASE("m_compute degenerate and boundary cases") {
  // rank-1 bundles: a single summand, zero deviation
  CHECK(m_compute(lattice({{-5}}), 1, {3}).value == 0);
  // totally degenerate lattice: every deviation squares to zero
  auto m = m_compute(lattice({{0, 0}, {0, 0}}), 3, {1, 2});
  CHECK(m.value == 0);
  CHECK(m.decomposition == decomposition({{0, 0}, {0, 0}, {1, 2}}));
  // rank-0 NS (Hopf surface)
  m = m_compute(IntersectionLattice(), 2, LatticeVector());
  CHECK(m.value == 0);
  CHECK(m.decomposition.size() == 2);
  // radical direction contributes nothing: only the second coordinate matters
  CHECK(m_compute(lattice({{0, 0}, {0, -1}}), 2, {5, 1}).value == 1);
  CHECK(m_compute(lattice({{0, 0}, {0, -1}}), 2, {5, 2}).value == 0);
  CHECK_THROWS_AS(m_compute(lattice({{-1, 2}, {2, -1}}), 2, {1, 0}), DomainError);
  CHECK_THROWS_AS(m_compute(lattice({{-1}}), 0, {1}), DomainError);
  CHECK_THROWS_AS(m_compute(lattice({{-1}}), 2, {1, 0}), DimensionError);
}

TEST_CASE("m_compute matches the nested-loop scan on small lattices") {
  Rng rng(11);
  for (int iter = 0; iter < 120; ++iter) {
    const auto l = random_semidefinite_lattice(rng, 1, 2, -4, 0);
    const int r = static_cast<int>(rng.uniform(2, 3));
    const auto a = rng.vector(l.rank(), -2, 2);
    const auto m = m_compute(l, r, a);
    const auto scan = brute::scan_m(to_gram(l), r, to_vec(a), 3);
    // the scan is a restriction of the infimum, so it can only be larger
    CHECK(m.scaled_objective <= scan.scaled);
    if (l.rank() == 1) CHECK(m.scaled_objective == scan.scaled);
  }
}

TEST_CASE("m_translate_reduce") {
  const auto l = lattice({{-2}});
  CHECK(m_translate_reduce(l, 2, {3}) == LatticeVector{1});
  CHECK(m_translate_reduce(l, 2, {4}) == LatticeVector{0});
  CHECK(m_translate_reduce(l, 3, {5}) == LatticeVector{2});
  CHECK(m_translate_reduce(l, 3, {-4}) == LatticeVector{2});
  Rng rng(5);
  for (int iter = 0; iter < 50; ++iter) {
    const auto g = random_semidefinite_lattice(rng, 1, 3, -4, 0);
    const int r = static_cast<int>(rng.uniform(2, 4));
    const auto a = rng.vector(g.rank(), -9, 9);
    const auto reduced = m_translate_reduce(g, r, a);
    for (const auto& c : reduced) CHECK((c >= 0 && c < r));
    CHECK(m_compute(g, r, reduced).value == m_compute(g, r, a).value);
  }
}

TEST_CASE("m invariants on random instances") {
  Rng rng(314);
  for (int iter = 0; iter < 150; ++iter) {
    const auto l = random_semidefinite_lattice(rng, 1, 3, -4, 0);
    const int r = static_cast<int>(rng.uniform(2, 4));
    const auto a = rng.vector(l.rank(), -2, 2);
    const auto m = m_compute(l, r, a);
    INFO("gram ", l.gram().to_string(), " r ", r, " a ", a.to_string());

    // sum constraint, integrality, non-negativity
    LatticeVector sum = LatticeVector::zero(l.rank());
    for (const auto& mu : m.decomposition) sum += mu;
    CHECK(sum == a);
    CHECK(m.integral);
    CHECK(m.value >= 0);
    CHECK(m.scaled_objective == m.value * r);

    // translation invariance
    const auto lambda = rng.vector(l.rank(), -4, 4);
    CHECK(m_compute(l, r, a + Integer(r) * lambda).value == m.value);

    // zero law
    const auto q = radical_and_quotient(l);
    bool divisible = true;
    for (const auto& c : q.project(a)) divisible = divisible && mpz_divisible_ui_p(c.get_mpz_t(), r);
    CHECK((m.value == 0) == divisible);

    // permutations of the optimum attain the same value
    auto perm = m.decomposition;
    std::sort(perm.begin(), perm.end());
    do CHECK(scaled_objective(l, r, a, perm) == m.scaled_objective);
    while (std::next_permutation(perm.begin(), perm.end()));

    // the balanced seed is feasible, so it bounds the optimum
    CHECK(m.scaled_objective <= scaled_objective(l, r, a, balanced_decomposition(r, a)));

    // agreement with the box oracle whenever it certifies coverage
    const auto o = m_oracle(l, r, a, 4);
    if (o.certified_global) {
      CHECK(o.result.value == m.value);
      CHECK(o.result.decomposition == m.decomposition);
    }
  }
}

TEST_CASE("scaled_objective rejects a wrong decomposition") {
  CHECK_THROWS_AS(scaled_objective(lattice({{-1}}), 2, {1}, {{0}, {0}}), DomainError);
  CHECK_THROWS_AS(scaled_objective(lattice({{-1}}), 2, {1}, {{1}}), DomainError);
}

TEST_CASE("balanced decomposition distributes residues") {
  const auto d = balanced_decomposition(3, {5, -1});
  CHECK(d == decomposition({{2, 0}, {2, 0}, {1, -1}}));
}
