#include "holex/cli.hpp"

#include "holex/blowup.hpp"
#include "holex/bundle.hpp"
#include "holex/errors.hpp"
#include "holex/existence.hpp"
#include "holex/m_invariant.hpp"
#include "holex/property_suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace holex::cli {

namespace {

// Emits either "key = value" (text) or "key=value" (structured) lines.
class Report {
 public:
  Report(std::ostream& out, OutputFormat format) : out_(out), format_(format) {}

  bool structured() const { return format_ == OutputFormat::structured; }

  template <class T>
  void field(const std::string& key, const T& value) {
    out_ << key << (structured() ? "=" : " = ") << value << '\n';
  }
  void text(const std::string& line) {
    if (!structured()) out_ << line << '\n';
  }

 private:
  std::ostream& out_;
  OutputFormat format_;
};

const char* boolean(bool b) { return b ? "true" : "false"; }

std::string rows(const std::vector<LatticeVector>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ';';
    s += vs[i].to_string();
  }
  return s;
}

std::string paren(const LatticeVector& v) { return "(" + v.to_string() + ")"; }

void write_decomposition(Report& rep, const std::vector<LatticeVector>& d) {
  if (rep.structured()) {
    rep.field("decomposition", rows(d));
    return;
  }
  for (std::size_t i = 0; i < d.size(); ++i) rep.field("mu_" + std::to_string(i + 1), paren(d[i]));
}

std::string describe(const JobConfig& cfg) {
  const auto& s = cfg.surface;
  const auto& e = cfg.bundle;
  std::ostringstream o;
  o << "surface: " << to_string(s.kind) << ", NS rank " << s.lattice.rank() << ", gram [" << s.lattice.gram().to_string()
    << "]";
  if (s.kind == SurfaceKind::k3_nonalgebraic) o << ", a(X) = " << s.algebraic_dimension;
  if (s.kind == SurfaceKind::class_vii_known) o << ", hypothesis " << (s.vii_applicable ? "holds" : "not asserted");
  o << "\nbundle: rank " << e.rank << ", c1 = " << paren(e.c1) << (e.c1_in_ns ? "" : " (not in NS)") << ", c2 = " << e.c2;
  return o.str();
}

int run_m(const JobConfig& cfg, Report& rep) {
  const MResult m = m_compute(cfg.surface.lattice, cfg.bundle.rank, cfg.bundle.c1);
  rep.field("m", m.value);
  rep.field("scaled_objective", m.scaled_objective);
  if (!m.integral) rep.field("integral", boolean(false));
  write_decomposition(rep, m.decomposition);
  const OracleResult oracle = m_oracle(cfg.surface.lattice, cfg.bundle.rank, cfg.bundle.c1, cfg.radius);
  rep.field("oracle_radius", cfg.radius);
  rep.field("oracle_m", oracle.result.value);
  rep.field("oracle_certified", boolean(oracle.certified_global));
  return kSuccess;
}

int run_delta(const JobConfig& cfg, Report& rep) {
  const auto& lattice = cfg.surface.lattice;
  rep.field("delta", discriminant(lattice, cfg.bundle));
  rep.field("p1", pontrjagin_p1(lattice, cfg.bundle));
  if (cfg.bundle.rank == 2) rep.field("w2_vanishes", boolean(w2_vanishes(lattice, cfg.bundle)));
  return kSuccess;
}

int run_chi(const JobConfig& cfg, Report& rep) {
  const EulerCharacteristic chi = euler_characteristic(cfg.surface, cfg.bundle);
  rep.field("delta", discriminant(cfg.surface.lattice, cfg.bundle));
  rep.field("chi", chi.value);
  rep.field("chi_integral", boolean(chi.integral));
  if (cfg.surface.kind == SurfaceKind::k3_nonalgebraic && cfg.bundle.rank == 2)
    rep.field("k3_simple_h1", k3_simple_h1(discriminant(cfg.surface.lattice, cfg.bundle)));
  return kSuccess;
}

int run_decide(const JobConfig& cfg, Report& rep) {
  const Verdict v = decide(cfg.surface, cfg.bundle);
  rep.text(describe(cfg));
  rep.field("delta", v.delta);
  if (v.m_value) rep.field("m", *v.m_value);
  if (v.exceptional_case) rep.text("EXCEPTIONAL: a(X) = 0, delta = 4 and c1 in 2NS; no holomorphic structure");
  rep.field("holomorphic", to_string(v.holomorphic));
  rep.field("filtrable", to_string(v.filtrable));
  rep.field("clause", v.clause);
  rep.field("exceptional", boolean(v.exceptional_case));
  if (v.m_value) rep.field("decomposition", rows(v.decomposition));
  const bool not_covered = v.holomorphic == Answer::not_covered || v.filtrable == Answer::not_covered;
  return cfg.strict && not_covered ? kNotCovered : kSuccess;
}

int run_blowup(const JobConfig& cfg, Report& rep) {
  const BlowupMap map = blow_up(cfg.surface.lattice);
  rep.field("total_gram", map.total.gram().to_string());
  rep.field("d_index", map.d_index);
  const PullbackInvariance pb = pullback_invariance_check(map, cfg.bundle);
  rep.field("pullback_c1", map.pull_back(cfg.bundle.c1).to_string());
  rep.field("pullback.delta_base", pb.delta_base);
  rep.field("pullback.delta_total", pb.delta_total);
  rep.field("pullback.m_base", pb.m_base);
  rep.field("pullback.m_total", pb.m_total);
  rep.field("pullback.holds", boolean(pb.holds));
  bool all = pb.holds;
  for (int k = 0; k < cfg.bundle.rank; ++k) {
    const BlowupInequality ineq = m_blowup_inequality_check(map, cfg.bundle.rank, cfg.bundle.c1, k);
    const std::string p = "inequality.k" + std::to_string(k) + ".";
    rep.field(p + "m_total", ineq.m_total);
    rep.field(p + "bound", ineq.bound);
    rep.field(p + "holds", boolean(ineq.holds));
    all = all && ineq.holds;
  }
  rep.field("violations", all ? 0 : 1);
  return all ? kSuccess : kViolations;
}

int run_pushforward(const JobConfig& cfg, Report& rep) {
  const BlowupMap map = as_blowup(cfg.surface.lattice);
  const TransferReport report = pr_transfer_check(map, {cfg.bundle});
  const TransferEntry& e = report.entries.front();
  rep.field("twist", e.twist);
  rep.field("normalized_c1", e.normalized.c1.to_string());
  rep.field("normalized_c2", e.normalized.c2);
  rep.field("k", e.split.k);
  rep.field("pushforward_c1", e.split.base_class.to_string());
  rep.field("delta", e.delta_total);
  rep.field("delta_pushforward_max", e.delta_pushforward);
  rep.field("m_total", e.m_total);
  rep.field("m_base", e.m_base);
  rep.field("margin", e.margin);
  rep.field("holds", boolean(e.holds));
  return e.holds ? kSuccess : kViolations;
}

int run_check(const JobConfig& cfg, Report& rep) {
  SuiteOptions options;
  const SuiteReport report = run_property_suite(cfg.seed, options);
  rep.field("seed", report.seed);
  rep.field("instances", report.instances);
  for (const auto& p : report.properties) {
    rep.field(p.name + ".checked", p.checked);
    rep.field(p.name + ".violations", p.violations);
  }
  if (rep.structured()) rep.field("violations", report.total_violations());
  else rep.text("violations: " + std::to_string(report.total_violations()));
  return report.total_violations() == 0 ? kSuccess : kViolations;
}

}  // namespace

int run(const JobConfig& config, std::ostream& out) {
  Report rep(out, config.format);
  switch (config.command) {
    case Command::m: return run_m(config, rep);
    case Command::delta: return run_delta(config, rep);
    case Command::chi: return run_chi(config, rep);
    case Command::decide: return run_decide(config, rep);
    case Command::blowup: return run_blowup(config, rep);
    case Command::pushforward: return run_pushforward(config, rep);
    case Command::check: return run_check(config, rep);
  }
  return kParseError;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Existence of holomorphic structures on bundles over non-algebraic surfaces", "holex"};
  std::string command_name;
  std::string config_path;
  std::uint64_t seed = 0;
  int radius = 3;
  std::string format = "text";
  bool strict = false;
  app.add_option("--command", command_name, "m | delta | chi | decide | blowup | pushforward | check")->required();
  app.add_option("--config", config_path, "surface/bundle description");
  app.add_option("--seed", seed, "seed for the check suite");
  app.add_option("--radius", radius, "oracle box radius")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "text | structured")->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--strict", strict, "exit 4 on a not_covered verdict");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "holex: " << e.what() << '\n';
    return kParseError;
  }

  const auto command = parse_command(command_name);
  if (!command) {
    err << "holex: unknown command '" << command_name << "'\n";
    return kParseError;
  }

  try {
    JobConfig cfg;
    if (!config_path.empty()) {
      std::ifstream in(config_path, std::ios::binary);
      if (!in) {
        err << "holex: cannot read config '" << config_path << "'\n";
        return kParseError;
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      cfg = parse_config(buf.str());
    } else if (*command != Command::check) {
      err << "holex: --config is required for command '" << command_name << "'\n";
      return kParseError;
    }
    cfg.command = *command;
    cfg.seed = seed;
    cfg.radius = radius;
    cfg.format = format == "structured" ? OutputFormat::structured : OutputFormat::text;
    cfg.strict = strict;
    return run(cfg, out);
  } catch (const ConfigError& e) {
    err << "holex: " << e.what() << '\n';
    return kParseError;
  } catch (const InvariantError& e) {
    err << "holex: " << e.what() << '\n';
    return kParseError;
  } catch (const DomainError& e) {
    err << "holex: " << e.what() << '\n';
    return kDomainError;
  } catch (const DimensionError& e) {
    err << "holex: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace holex::cli
