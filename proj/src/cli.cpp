#include "maxplus/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <optional>
#include <ostream>

#include "maxplus/errors.hpp"
#include "maxplus/invariance.hpp"
#include "maxplus/precedence.hpp"
#include "maxplus/problem_file.hpp"
#include "maxplus/pteg.hpp"

namespace maxplus::cli {

namespace {

using nlohmann::ordered_json;

struct RunConfig {
  std::string file;
  std::vector<std::string> params;
  std::optional<std::size_t> probe_bound;
  std::size_t horizon = 2;
  std::string seed;
  std::string format = "human";
  bool emit_pi = false;
  bool emit_s = false;
};

ordered_json to_json(const Vector& v) {
  ordered_json out = ordered_json::array();
  for (const Scalar& s : v) out.push_back(s.to_string());
  return out;
}

ordered_json to_json(const Matrix& m) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    out.push_back(std::move(row));
  }
  return out;
}

std::map<std::string, std::string> parse_overrides(const std::vector<std::string>& params) {
  std::map<std::string, std::string> out;
  for (const std::string& p : params) {
    auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("--param expects name=value, got '" + p + "'");
    out[p.substr(0, eq)] = p.substr(eq + 1);
  }
  return out;
}

std::optional<Vector> parse_seed(const std::string& text) {
  if (text.empty()) return std::nullopt;
  Vector v;
  std::size_t start = 0;
  for (;;) {
    auto comma = text.find(',', start);
    v.push_back(Scalar::parse(std::string_view(text).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return v;
}

std::optional<std::size_t> resolve_probe_bound(const RunConfig& cfg) {
  if (cfg.probe_bound) return cfg.probe_bound;
  const char* env = std::getenv(kProbeBoundEnv);
  if (env == nullptr || *env == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (*end != '\0' || value == 0) {
    throw ParseError(std::string(kProbeBoundEnv) + " must be a positive integer, got '" + env + "'");
  }
  return static_cast<std::size_t>(value);
}

int exit_code(ConsistencyVerdict::Kind kind) {
  switch (kind) {
    case ConsistencyVerdict::Kind::Consistent:
      return kOk;
    case ConsistencyVerdict::Kind::NotWeaklyConsistent:
      return kNotWeaklyConsistent;
    case ConsistencyVerdict::Kind::NotConsistentWeakOpen:
      return kWeakOpen;
  }
  return kUsage;
}

int exit_code(PhiReport::Classification c) {
  switch (c) {
    case PhiReport::Classification::ConvergedNonEmpty:
      return kOk;
    case PhiReport::Classification::RealEmptyAtStep:
      return kNotWeaklyConsistent;
    case PhiReport::Classification::NonConvergentWeakOpen:
      return kWeakOpen;
  }
  return kUsage;
}

int run_check(const PtegSystem& sys, const RunConfig& cfg, std::ostream& out) {
  const ConsistencyVerdict verdict = check_consistency(sys, resolve_probe_bound(cfg));
  const std::size_t n2 = sys.size() * sys.size();

  std::size_t last = n2 + 1;
  if (verdict.first_divergent_k) last = *verdict.first_divergent_k;
  if (verdict.verified_up_to) last = *verdict.verified_up_to;
  const std::vector<Matrix> pis = pi_sequence(sys, std::max(last, n2 + 1));

  if (cfg.format == "json") {
    ordered_json doc;
    doc["command"] = "check";
    doc["n"] = sys.size();
    doc["verdict"] = to_string(verdict.kind);
    doc["exit_code"] = exit_code(verdict.kind);
    if (verdict.pi_fixed) doc["pi_fixed"] = to_json(*verdict.pi_fixed);
    if (verdict.first_divergent_k) doc["first_divergent_k"] = *verdict.first_divergent_k;
    if (verdict.verified_up_to) doc["verified_up_to"] = *verdict.verified_up_to;
    if (pis.size() > n2 + 1) {
      doc["pi_n2"] = to_json(pis[n2]);
      doc["pi_n2_plus_1"] = to_json(pis[n2 + 1]);
    }
    if (cfg.emit_pi) {
      ordered_json seq = ordered_json::array();
      for (std::size_t k = 0; k <= last && k < pis.size(); ++k) seq.push_back(to_json(pis[k]));
      doc["pi_sequence"] = std::move(seq);
    }
    out << doc.dump(2) << '\n';
    return exit_code(verdict.kind);
  }

  out << "verdict: " << to_string(verdict.kind) << '\n';
  const std::string lhs = "Pi_" + std::to_string(n2);
  const std::string rhs = "Pi_" + std::to_string(n2 + 1);
  switch (verdict.kind) {
    case ConsistencyVerdict::Kind::Consistent:
      out << lhs << " == " << rhs << ", finite\n" << "Pi_fixed:\n" << *verdict.pi_fixed;
      break;
    case ConsistencyVerdict::Kind::NotWeaklyConsistent:
      out << "first divergent: Pi_" << *verdict.first_divergent_k << '\n'
          << "Pi_" << *verdict.first_divergent_k << ":\n"
          << pis[*verdict.first_divergent_k];
      break;
    case ConsistencyVerdict::Kind::NotConsistentWeakOpen:
      out << lhs << " != " << rhs << '\n'
          << lhs << ":\n"
          << pis[n2] << rhs << ":\n"
          << pis[n2 + 1] << "all Pi_k finite for k <= " << *verdict.verified_up_to
          << " (weak consistency not decided beyond)\n";
      break;
  }
  if (cfg.emit_pi) {
    for (std::size_t k = 0; k <= last && k < pis.size(); ++k) out << "Pi_" << k << ":\n" << pis[k];
  }
  return exit_code(verdict.kind);
}

int run_invariant(const PtegSystem& sys, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::optional<std::size_t> bound = resolve_probe_bound(cfg);
  const PhiReport report = phi_iterate(sys, bound, cfg.emit_s);
  const ConsistencyVerdict verdict = check_consistency(sys, bound);
  if (!verdicts_agree(verdict, report)) {
    err << "internal error: phi classification " << to_string(report.classification)
        << " disagrees with consistency verdict " << to_string(verdict.kind) << '\n';
    return kUsage;
  }

  if (cfg.format == "json") {
    ordered_json doc;
    doc["command"] = "invariant";
    doc["n"] = sys.size();
    doc["classification"] = to_string(report.classification);
    doc["step"] = report.step;
    doc["probe_bound"] = report.probe_bound;
    doc["exit_code"] = exit_code(report.classification);
    if (report.stable_from) doc["stable_from"] = *report.stable_from;
    if (report.kstar_generator) doc["kstar_generator"] = to_json(*report.kstar_generator);
    if (cfg.emit_s) {
      ordered_json seq = ordered_json::array();
      for (const Matrix& s : report.s_matrices) seq.push_back(to_json(s));
      doc["s_matrices"] = std::move(seq);
    }
    out << doc.dump(2) << '\n';
    return exit_code(report.classification);
  }

  out << to_string(report.classification) << ' ' << report.step << '\n';
  switch (report.classification) {
    case PhiReport::Classification::ConvergedNonEmpty:
      out << "S_" << *report.stable_from + 2 << " == S_" << *report.stable_from + 3 << '\n'
          << "K* generator:\n"
          << *report.kstar_generator;
      break;
    case PhiReport::Classification::RealEmptyAtStep:
      out << "S_" << report.step + 2 << " holds +inf: no real vector in phi^k(K) from k = " << report.step << '\n';
      break;
    case PhiReport::Classification::NonConvergentWeakOpen:
      out << "no divergence and no stabilization up to Pi_" << report.probe_bound << '\n';
      break;
  }
  if (cfg.emit_s) {
    for (std::size_t k = 0; k < report.s_matrices.size(); ++k) {
      out << "S_" << k + 2 << ":\n" << report.s_matrices[k];
    }
  }
  return exit_code(report.classification);
}

int run_trajectory(const PtegSystem& sys, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Trajectory t;
  try {
    t = synthesize_trajectory(sys, cfg.horizon, parse_seed(cfg.seed));
  } catch (const InfeasibleHorizon& e) {
    const char* reason = e.reason() == InfeasibleHorizon::Reason::Divergent ? "divergent" : "unreached";
    err << "InfeasibleHorizon (" << reason << "): " << e.what() << '\n';
    if (cfg.format == "json") {
      ordered_json doc;
      doc["command"] = "trajectory";
      doc["horizon"] = cfg.horizon;
      doc["error"] = "InfeasibleHorizon";
      doc["reason"] = reason;
      doc["message"] = e.what();
      out << doc.dump(2) << '\n';
    }
    return kInfeasibleHorizon;
  }
  if (!validate_trajectory(sys, t)) {
    err << "internal error: synthesized trajectory violates the constraints\n";
    return kUsage;
  }

  if (cfg.format == "json") {
    ordered_json doc;
    doc["command"] = "trajectory";
    doc["horizon"] = t.horizon;
    ordered_json states = ordered_json::array();
    for (const Vector& x : t.states) states.push_back(to_json(x));
    ordered_json inputs = ordered_json::array();
    for (const Vector& u : t.inputs) inputs.push_back(to_json(u));
    doc["states"] = std::move(states);
    doc["inputs"] = std::move(inputs);
    doc["valid"] = true;
    out << doc.dump(2) << '\n';
    return kOk;
  }

  for (std::size_t k = 0; k < t.horizon; ++k) {
    out << "x(" << k + 1 << ") = " << to_string(t.states[k]);
    if (k < t.inputs.size()) out << "   u(" << k + 1 << ") = " << to_string(t.inputs[k]);
    out << '\n';
  }
  out << "valid: yes\n";
  return kOk;
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("file", cfg.file, "Problem file (JSON)")->required();
  cmd->add_option("--param", cfg.params, "Parameter binding name=value (repeatable)");
  cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"human", "json", "dot"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Max-plus consistency and controlled-invariance analysis of time-window constrained systems"};
  app.require_subcommand(1);

  CLI::App* check = app.add_subcommand("check", "Decide consistency through the Pi recursion");
  add_common(check, cfg);
  check->add_option("--probe-bound", cfg.probe_bound, "Largest Pi index probed for divergence")
      ->check(CLI::PositiveNumber);
  check->add_flag("--emit-pi", cfg.emit_pi, "Print the Pi matrices");

  CLI::App* invariant = app.add_subcommand("invariant", "Iterate the controlled-invariance map and classify it");
  add_common(invariant, cfg);
  invariant->add_option("--probe-bound", cfg.probe_bound, "Largest Pi index probed")->check(CLI::PositiveNumber);
  invariant->add_flag("--emit-s", cfg.emit_s, "Print the S matrices");

  CLI::App* trajectory = app.add_subcommand("trajectory", "Synthesize a finite trajectory");
  add_common(trajectory, cfg);
  trajectory->add_option("--horizon", cfg.horizon, "Horizon K (>= 2)")->check(CLI::Range(std::size_t{2}, SIZE_MAX));
  trajectory->add_option("--seed", cfg.seed, "Seed vector v1,v2,... (length n, 2n or K n)");

  CLI::App* graph = app.add_subcommand("graph", "Print the precedence graph of M_[K] as DOT");
  add_common(graph, cfg);
  graph->add_option("--horizon", cfg.horizon, "Horizon K (>= 1)")->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (cfg.format == "dot" && !graph->parsed()) throw ParseError("--format dot is only valid for 'graph'");
    const ProblemFile problem = load_problem(cfg.file);
    const PtegSystem sys = instantiate(problem, parse_overrides(cfg.params));
    if (check->parsed()) return run_check(sys, cfg, out);
    if (invariant->parsed()) return run_invariant(sys, cfg, out, err);
    if (trajectory->parsed()) return run_trajectory(sys, cfg, out, err);
    out << export_dot(sys.block_spec(), cfg.horizon);
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace maxplus::cli
