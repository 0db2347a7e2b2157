#include <doctest.h>

#include "holex/bundle.hpp"
#include "holex/errors.hpp"
#include "holex/m_invariant.hpp"
#include "holex/random.hpp"
#include "test_util.hpp"

using namespace holex;
using holex::test::lattice;

namespace {

SurfaceModel k3(std::initializer_list<std::initializer_list<long>> gram) {
  return SurfaceModel::k3(lattice(gram), 0);
}

Rational classical_chi(const SurfaceModel& s, const BundleTopology& e) {
  const auto twice = brute::twice_classical_chi(e.rank, s.chi_o.get_si(), square(s.lattice, e.c1).get_si(),
                                                e.c2.get_si(), pairing(s.lattice, e.c1, s.anticanonical).get_si());
  return ratio(twice, 2);
}

}  // namespace

TEST_CASE("discriminant") {
  const auto l = lattice({{-2}});
  CHECK(discriminant(l, {2, {1}, 0}) == 2);
  CHECK(discriminant(l, {2, {0}, 1}) == 4);
  CHECK(discriminant(l, {3, {0}, 2}) == 12);
  CHECK_THROWS_AS(discriminant(l, {2, {1, 0}, 0}), DimensionError);
  CHECK_THROWS_AS(discriminant(l, {0, {1}, 0}), InvariantError);
}

TEST_CASE("pontrjagin_p1 is minus the discriminant") {
  const auto l = lattice({{-2}});
  CHECK(pontrjagin_p1(l, {2, {1}, 1}) == -6);
  CHECK(pontrjagin_p1(l, {2, {0}, 0}) == 0);
  CHECK(pontrjagin_p1(l, {2, {0}, 2}) == -8);
}

TEST_CASE("w2_vanishes tests c1 in 2NS") {
  CHECK(w2_vanishes(lattice({{-2, 0}, {0, -2}}), {2, {2, 0}, 0}));
  CHECK_FALSE(w2_vanishes(lattice({{-2}}), {2, {1}, 0}));
  CHECK(w2_vanishes(lattice({{-2}}), {2, {0}, 0}));
  CHECK_THROWS_AS(w2_vanishes(lattice({{-2}}), {3, {0}, 0}), DomainError);
}

TEST_CASE("w2 vanishing forces m(2, c1) = 0") {
  Rng rng(21);
  for (int iter = 0; iter < 100; ++iter) {
    const auto l = random_semidefinite_lattice(rng, 1, 3, -4, 0);
    const BundleTopology e{2, Integer(2) * rng.vector(l.rank(), -2, 2), 0};
    REQUIRE(w2_vanishes(l, e));
    CHECK(m_compute(l, 2, e.c1).value == 0);
  }
}

TEST_CASE("Riemann-Roch on K3 against the classical form") {
  const auto s = k3({{-2}});
  const BundleTopology cases[] = {{2, {0}, 0}, {2, {0}, 1}, {2, {1}, 1}};
  const long expected[] = {4, 3, 2};
  for (int i = 0; i < 3; ++i) {
    CHECK(classical_chi(s, cases[i]) == expected[i]);
    const auto chi = euler_characteristic(s, cases[i]);
    CHECK(chi.value == expected[i]);
    CHECK(chi.integral);
  }
}

TEST_CASE("Riemann-Roch agrees with the classical form on random surfaces") {
  Rng rng(8);
  for (int iter = 0; iter < 200; ++iter) {
    const auto l = random_semidefinite_lattice(rng, 1, 3, -4, 0);
    const auto s = SurfaceModel::generic(l, rng.uniform(-2, 2), rng.vector(l.rank(), -3, 3));
    const BundleTopology e{static_cast<int>(rng.uniform(1, 5)), rng.vector(l.rank(), -4, 4), rng.uniform(-5, 5)};
    const auto chi = euler_characteristic(s, e);
    CHECK(chi.value == classical_chi(s, e));
    CHECK(chi.integral == (chi.value.get_den() == 1));
  }
}

TEST_CASE("chi is integral for rank 2 on even K3 lattices") {
  Rng rng(12);
  int tested = 0;
  while (tested < 100) {
    const auto l = random_semidefinite_lattice(rng, 1, 3, -4, 0);
    bool even = true;
    for (std::size_t i = 0; i < l.rank(); ++i) even = even && mpz_even_p(l.gram()(i, i).get_mpz_t());
    if (!even) continue;
    ++tested;
    const auto s = SurfaceModel::k3(l, 0);
    const BundleTopology e{2, rng.vector(l.rank(), -4, 4), rng.uniform(-5, 5)};
    CHECK(euler_characteristic(s, e).integral);
  }
}

TEST_CASE("k3_simple_h1 matches chi(End_0) from Riemann-Roch") {
  const auto s = k3({{-2}});
  for (long delta = -4; delta <= 16; ++delta) {
    // End_0 E: rank 3, c1 = 0, c2 = Delta(E), so h^1 = -chi when h^0 = h^2 = 0
    const auto chi_end0 = euler_characteristic(s, {3, {0}, delta});
    CHECK(chi_end0.value == 6 - delta);
    CHECK(k3_simple_h1(delta) == -chi_end0.value);
    CHECK((k3_simple_h1(delta) < 0) == (delta < 6));
  }
  CHECK(k3_simple_h1(4) == -2);
  CHECK(k3_simple_h1(6) == 0);
  CHECK(k3_simple_h1(8) == 2);
}

TEST_CASE("discriminant parity and twist invariance") {
  Rng rng(77);
  for (int iter = 0; iter < 200; ++iter) {
    const auto l = random_semidefinite_lattice(rng, 1, 3, -4, 0);
    const int r = static_cast<int>(rng.uniform(1, 5));
    const BundleTopology e{r, rng.vector(l.rank(), -4, 4), rng.uniform(-5, 5)};
    const Integer delta = discriminant(l, e);
    const Integer shifted = delta + (r - 1) * square(l, e.c1);
    CHECK(mpz_divisible_ui_p(shifted.get_mpz_t(), 2 * r));

    const auto twisted = twist_by_line_bundle(l, e, rng.vector(l.rank(), -3, 3));
    CHECK(discriminant(l, twisted) == delta);
  }
}
