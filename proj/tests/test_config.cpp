#include <doctest.h>

#include "holex/config.hpp"
#include "holex/errors.hpp"
#include "holex/random.hpp"
#include "test_util.hpp"

#include <string>

using namespace holex;
using holex::test::lattice;

namespace {

const char* kMinimalK3 =
    "[surface]\n"
    "kind = k3\n"
    "gram = -2\n"
    "[bundle]\n"
    "rank = 2\n"
    "c1 = 0\n"
    "c2 = 1\n";

// Returns the error for `text`, failing the test if it parses.
ConfigError parse_error(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e;
  }
  FAIL("expected a ConfigError for:\n" << text);
  return ConfigError("unreachable");
}

}  // namespace

TEST_CASE("minimal K3 config fills defaults") {
  const auto cfg = parse_config(kMinimalK3);
  CHECK(cfg.surface.kind == SurfaceKind::k3_nonalgebraic);
  CHECK(cfg.surface.lattice == lattice({{-2}}));
  CHECK(cfg.surface.chi_o == 2);
  CHECK(cfg.surface.anticanonical == LatticeVector{0});
  CHECK(cfg.surface.algebraic_dimension == 0);
  CHECK_FALSE(cfg.surface.vii_applicable);
  CHECK(cfg.bundle.rank == 2);
  CHECK(cfg.bundle.c1 == LatticeVector{0});
  CHECK(cfg.bundle.c2 == 1);
  CHECK(cfg.bundle.c1_in_ns);
}

TEST_CASE("full config with comments and blank lines") {
  const auto cfg = parse_config(
      "# a class VII surface\n"
      "\n"
      "[surface]\n"
      "  kind = class7   # trailing comment\n"
      "gram = -1,0; 0,-1\n"
      "anticanonical = 1,1\n"
      "vii_applicable = true\n"
      "[bundle]\n"
      "rank = 3\n"
      "c1 = 1,-1\n"
      "c1_in_ns = false\n"
      "c2 = -4\n");
  CHECK(cfg.surface.kind == SurfaceKind::class_vii_known);
  CHECK(cfg.surface.chi_o == 0);
  CHECK(cfg.surface.anticanonical == LatticeVector{1, 1});
  CHECK(cfg.surface.vii_applicable);
  CHECK(cfg.bundle.c1 == LatticeVector{1, -1});
  CHECK_FALSE(cfg.bundle.c1_in_ns);
  CHECK(cfg.bundle.c2 == -4);
}

TEST_CASE("rank 0 lattice needs empty gram and c1") {
  const auto cfg = parse_config("[surface]\nkind = class7\ngram =\n[bundle]\nrank = 2\nc1 =\nc2 = 0\n");
  CHECK(cfg.surface.lattice.rank() == 0);
  CHECK(cfg.bundle.c1.size() == 0);
}

TEST_CASE("semantic errors") {
  CHECK_THROWS_WITH_AS(parse_config("[surface]\nkind = k3\ngram = 2\n[bundle]\nrank = 2\nc1 = 0\nc2 = 0\n"),
                       doctest::Contains("lattice not negative semi-definite"), DomainError);

  auto e = parse_error("[surface]\nkind = k3\ngram = -2\n[bundle]\nrank = 2\nc1 = 0\n");
  CHECK(std::string(e.what()) == "missing field c2");
  CHECK(e.line() == 0);

  e = parse_error("[surface]\nkind = k3\ngram = -2,1; 0,-2\n[bundle]\nrank = 2\nc1 = 0,0\nc2 = 0\n");
  CHECK(std::string(e.what()).find("gram not symmetric at (1,2)") != std::string::npos);

  e = parse_error("[surface]\nkind = k3\ngram = -2,0; 0,-2\n[bundle]\nrank = 2\nc1 = 0\nc2 = 0\n");
  CHECK(std::string(e.what()).find("c1 has length 1, expected 2") != std::string::npos);

  // K3 invariants: odd diagonal, wrong chi
  CHECK_THROWS_AS(parse_config("[surface]\nkind = k3\ngram = -1\n[bundle]\nrank = 2\nc1 = 0\nc2 = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[surface]\nkind = k3\ngram = -2\nchi_o = 1\n[bundle]\nrank = 2\nc1 = 0\nc2 = 0\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config("[surface]\nkind = k3\ngram = -2\na_x = 2\n[bundle]\nrank = 2\nc1 = 0\nc2 = 0\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config("[surface]\nkind = k3\ngram = -2\n[bundle]\nrank = 0\nc1 = 0\nc2 = 0\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config("[surface]\nkind = k4\ngram = -2\n[bundle]\nrank = 2\nc1 = 0\nc2 = 0\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config("[surface]\nkind = k3\ngram = -2\n"), ConfigError);
}

TEST_CASE("syntax errors carry line and column") {
  auto e = parse_error("[surface]\nkind = k3\ngram = -2,x\n[bundle]\nrank = 2\nc1 = 0\nc2 = 0\n");
  CHECK(e.line() == 3);
  CHECK(e.column() == 11);
  CHECK(std::string(e.what()) == "line 3, column 11: invalid integer 'x'");

  e = parse_error("[surface]\nkind = k3\ngram -2\n");
  CHECK(e.line() == 3);

  e = parse_error("[surface\n");
  CHECK(e.line() == 1);

  e = parse_error("kind = k3\n");
  CHECK(e.line() == 1);
  CHECK(e.column() == 1);

  e = parse_error("[surface]\nkind = k3\n  colour = red\n");
  CHECK(e.line() == 3);
  CHECK(e.column() == 3);

  e = parse_error("[surface]\nkind = k3\nkind = k3\n");
  CHECK(e.line() == 3);

  e = parse_error("[surface]\n[surface]\n");
  CHECK(e.line() == 2);

  e = parse_error("[extra]\n");
  CHECK(e.line() == 1);

  e = parse_error("[surface]\nkind = k3\ngram = -2,0; 0\n[bundle]\nrank = 2\nc1 = 0\nc2 = 0\n");
  CHECK(e.line() == 3);

  e = parse_error("[surface]\nkind = k3\ngram = -2,0\n[bundle]\nrank = 2\nc1 = 0\nc2 = 0\n");
  CHECK(e.line() == 3);

  e = parse_error("[surface]\nkind = k3\ngram = -2\nvii_applicable = maybe\n[bundle]\nrank = 2\nc1 = 0\nc2 = 0\n");
  CHECK(e.line() == 4);
  CHECK(e.column() == 18);
}

TEST_CASE("print and parse round trip") {
  Rng rng(2024);
  for (int iter = 0; iter < 300; ++iter) {
    JobConfig cfg;
    const auto kind = static_cast<int>(rng.uniform(0, 2));
    auto l = random_semidefinite_lattice(rng, 0, 3, -4, 0);
    if (kind == 0) {
      // K3 needs an even form
      IntMatrix g = l.gram();
      for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= 2;
      cfg.surface = SurfaceModel::k3(IntersectionLattice(g), static_cast<int>(rng.uniform(0, 1)));
    } else if (kind == 1) {
      cfg.surface = SurfaceModel::class_vii(l, rng.coin());
    } else {
      cfg.surface = SurfaceModel::generic(l, rng.uniform(-3, 3), rng.vector(l.rank(), -2, 2));
    }
    const std::size_t n = cfg.surface.lattice.rank();
    cfg.bundle = {static_cast<int>(rng.uniform(1, 5)), rng.vector(n, -3, 3), rng.uniform(-20, 20), rng.coin()};

    const auto text = print_config(cfg);
    const auto back = parse_config(text);
    CHECK(back == cfg);
    CHECK(print_config(back) == text);
  }
}

TEST_CASE("command names") {
  for (Command c : {Command::m, Command::delta, Command::chi, Command::decide, Command::blowup,
                    Command::pushforward, Command::check})
    CHECK(parse_command(to_string(c)) == c);
  CHECK_FALSE(parse_command("solve"));
}
