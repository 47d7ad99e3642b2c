// qconc: concurrence lower bounds for multipartite mixed states.
//
// Subcommands:
//   pure    both pure-state concurrence forms of a state file
//   bound   lower bound of a state file (theorem2 | hierarchy | weighted)
//   sweep   bound curve over a built-in family, written as CSV
//   verify  seeded property suite; exit 3 on any failure
//
// Exit codes: 0 success, 1 invalid input, 2 numerical failure,
// 3 property-suite failure.

#include "qconc/qconc.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace {

std::vector<std::pair<int, double>> parse_weights(const std::string& spec) {
  std::vector<std::pair<int, double>> weights;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    const std::size_t comma = spec.find(',', pos);
    const std::string item = spec.substr(pos, comma == std::string::npos ? comma : comma - pos);
    const std::size_t colon = item.find(':');
    qconc::require(colon != std::string::npos, "weights: expected m:p pairs, got \"" + item + "\"");
    try {
      weights.emplace_back(std::stoi(item.substr(0, colon)), std::stod(item.substr(colon + 1)));
    } catch (const std::exception&) {
      throw qconc::invalid_input("weights: cannot parse \"" + item + "\"");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  qconc::require(!weights.empty(), "weights: empty specification");
  return weights;
}

void print_report(const qconc::BoundReport& report) {
  std::cout << "method          " << report.method;
  if (report.coefficient && report.method == "hierarchy") {
    std::cout << " (m=" << report.coefficient->m << ")";
  }
  std::cout << '\n';
  std::cout << "value           " << qconc::format_double(report.value) << '\n';
  std::cout << "value_squared   " << qconc::format_double(report.value_squared) << '\n';
  if (report.coefficient) {
    std::cout << "coefficient     " << report.coefficient->to_string() << '\n';
  }
  std::cout << "pt_sum          " << qconc::format_double(report.pt_sum) << '\n';
  std::cout << "realign_sum     " << qconc::format_double(report.realign_sum) << '\n';
  for (const auto& c : report.components) {
    std::cout << "  m=" << c.m << " weight=" << qconc::format_double(c.weight)
              << " value_squared=" << qconc::format_double(c.value_squared) << " coefficient="
              << c.coefficient.to_string() << '\n';
  }
  if (!report.per_substate.empty()) {
    std::size_t contributing = 0;
    for (const auto& s : report.per_substate) {
      if (s.bound_squared > 1e-15) ++contributing;
    }
    std::cout << "sub-states      " << report.per_substate.size() << " total, " << contributing
              << " contributing\n";
    for (const auto& s : report.per_substate) {
      if (s.bound_squared <= 1e-15) continue;
      std::cout << "  " << s.selector.to_string() << "  trace="
                << qconc::format_double(s.trace) << "  bound^2="
                << qconc::format_double(s.bound_squared) << "  pt-deficit=[";
      for (std::size_t j = 0; j < s.pt_deficit.size(); ++j) {
        if (j) std::cout << ',';
        std::cout << qconc::format_double(s.pt_deficit[j]);
      }
      std::cout << "]  realign-deficit=[";
      for (std::size_t j = 0; j < s.realign_deficit.size(); ++j) {
        if (j) std::cout << ',';
        std::cout << qconc::format_double(s.realign_deficit[j]);
      }
      std::cout << "]\n";
    }
  }
}

int cmd_pure(const std::string& path, bool prefactor, bool json) {
  const qconc::StateFile file = qconc::read_state_file(path);
  qconc::require(file.kind == qconc::StateKind::pure,
                 "pure: state file must hold a pure state (kind \"pure\")");
  const qconc::PureState psi = qconc::to_pure(file);
  qconc::require(psi.normalized(), "pure: state is not normalized");
  const auto purity = qconc::pure_concurrence_purity(psi, prefactor);
  const auto minors = qconc::pure_concurrence_minors(psi, prefactor);
  const double diff = std::abs(purity.value - minors.value);
  if (json) {
    nlohmann::json doc{{"dims", psi.dims().dims()},
                       {"purity_form", purity.value},
                       {"minor_form", minors.value},
                       {"difference", diff},
                       {"prefactor_applied", prefactor}};
    std::cout << doc.dump(1) << '\n';
  } else {
    std::cout << "state           " << psi.dims().to_string() << " pure\n";
    std::cout << "purity-form     " << qconc::format_double(purity.value) << '\n';
    std::cout << "minor-form      " << qconc::format_double(minors.value) << '\n';
    std::cout << "|difference|    " << qconc::format_double(diff) << '\n';
  }
  return 0;
}

int cmd_bound(const std::string& path, std::string method, int m, const std::string& weights_spec,
              bool json, bool parallel) {
  const qconc::DensityMatrix rho = qconc::to_density(qconc::read_state_file(path));
  qconc::BoundReport report;
  if (!weights_spec.empty()) {
    report = qconc::convex_combination_bound(rho, parse_weights(weights_spec),
                                             qconc::theorem2_inner(), parallel);
  } else {
    if (method == "auto") {
      method = (rho.dims().dims() == std::vector<int>{2, 2, 2}) ? "theorem2" : "hierarchy";
    }
    if (method == "theorem2") {
      report = qconc::three_qubit_bound(rho);
    } else if (method == "hierarchy") {
      report = qconc::hierarchy_bound(rho, m, qconc::theorem2_inner(), parallel);
    } else {
      throw qconc::invalid_input("bound: method must be theorem2 or hierarchy");
    }
  }
  if (json) {
    std::cout << qconc::report_to_json(report).dump(1) << '\n';
  } else {
    print_report(report);
  }
  return 0;
}

int cmd_sweep(const std::string& family, double start, double stop, int steps,
              const std::string& method, int m, const std::string& output, bool parallel) {
  qconc::SweepOptions opt;
  opt.family = qconc::sweep_family_from_string(family);
  opt.start = start;
  opt.stop = stop;
  opt.steps = steps;
  opt.method = method == "auto"
                   ? (opt.family == qconc::SweepFamily::dct ? "theorem2" : "hierarchy")
                   : method;
  opt.m = m;
  opt.parallel = parallel;
  const auto rows = qconc::run_sweep(opt);
  qconc::write_sweep_csv(output, rows);
  std::cout << "wrote " << rows.size() << " rows to " << output << '\n';
  return 0;
}

int cmd_verify(int trials, std::uint64_t seed, const std::string& inject) {
  qconc::VerifyOptions opt;
  opt.trials = trials;
  opt.seed = seed;
  if (!inject.empty()) {
    qconc::require(inject == "coefficient", "verify: unknown fault \"" + inject + "\"");
    opt.inject_coefficient_fault = true;
  }
  const qconc::VerifyResult result = qconc::run_verification(opt);
  for (const auto& line : result.lines) std::cout << line << '\n';
  std::cout << (result.passed() ? "verify: all checks passed" : "verify: FAILURES detected")
            << " (" << result.checks - result.failures << "/" << result.checks << ")\n";
  return result.passed() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"concurrence lower bounds for multipartite mixed states"};
  app.require_subcommand(1);

  std::string file;
  std::string method = "auto";
  std::string weights_spec;
  std::string family;
  std::string output;
  std::string inject;
  int m = 2;
  int steps = 30;
  int trials = 100;
  double start = 0.0;
  double stop = 1.0;
  std::uint64_t seed = 20260808ULL;
  bool json = false;
  bool prefactor = false;
  bool parallel = false;

  auto* pure = app.add_subcommand("pure", "pure-state concurrence, both forms");
  pure->add_option("file", file, "state file (kind \"pure\")")->required();
  pure->add_flag("--prefactor", prefactor, "apply the dimension-dependent prefactor");
  pure->add_flag("--json", json, "machine-readable output");

  auto* bound = app.add_subcommand("bound", "concurrence lower bound of a state file");
  bound->add_option("file", file, "state file")->required();
  bound->add_option("--method", method, "theorem2 | hierarchy (default: by dims)");
  bound->add_option("--m", m, "sub-state size for hierarchy")->capture_default_str();
  bound->add_option("--weights", weights_spec, "convex combination weights, e.g. 2:0.5,3:0.5");
  bound->add_flag("--json", json, "emit the full report as JSON");
  bound->add_flag("--parallel", parallel, "parallel sub-state evaluation (nondeterministic order)");

  auto* sweep = app.add_subcommand("sweep", "bound curve over a built-in family, CSV output");
  sweep->add_option("family", family, "dct | depol333")->required();
  sweep->add_option("--output", output, "CSV output path")->required();
  sweep->add_option("--start", start, "first parameter value")->capture_default_str();
  sweep->add_option("--stop", stop, "last parameter value")->capture_default_str();
  sweep->add_option("--steps", steps, "grid size including endpoints")->capture_default_str();
  sweep->add_option("--method", method, "theorem2 | hierarchy (default: by family)");
  sweep->add_option("--m", m, "sub-state size for hierarchy")->capture_default_str();
  sweep->add_flag("--parallel", parallel, "parallel sweep evaluation");

  auto* verify = app.add_subcommand("verify", "run the seeded property suite");
  verify->add_option("--trials", trials, "cases per check")->capture_default_str();
  verify->add_option("--seed", seed, "base seed")->capture_default_str();
  verify->add_option("--inject-fault", inject, "")->group("");  // test hook

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (pure->parsed()) return cmd_pure(file, prefactor, json);
    if (bound->parsed()) return cmd_bound(file, method, m, weights_spec, json, parallel);
    if (sweep->parsed()) return cmd_sweep(family, start, stop, steps, method, m, output, parallel);
    if (verify->parsed()) return cmd_verify(trials, seed, inject);
  } catch (const qconc::invalid_input& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const qconc::numerical_error& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
