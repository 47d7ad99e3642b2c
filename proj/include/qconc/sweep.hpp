#pragma once

// Parameter sweeps over the built-in state families, with byte-stable CSV
// output (shortest round-trip decimal formatting, fixed column set).
//
// Families:
//   depol333  (1-x)/27 * I + x |ghz><ghz| on 3x3x3; entanglement is
//             detected for x > 2/29.
//   dct       linear path in GHZ-diagonal weight space from the uniform
//             mixture (x = 0, separable) to the weights
//             (1/6, 1/2, 1/18, 1/18, 1/18) at x = 1.

#include "qconc/bounds.hpp"
#include "qconc/states.hpp"

#include <charconv>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

namespace qconc {

enum class SweepFamily { dct, depol333 };

inline SweepFamily sweep_family_from_string(const std::string& name) {
  if (name == "dct") return SweepFamily::dct;
  if (name == "depol333") return SweepFamily::depol333;
  throw invalid_input("unknown sweep family: " + name);
}

inline DctParams dct_sweep_params(double x) {
  const DctParams uniform{0.125, 0.125, 0.125, 0.125, 0.125};
  const DctParams target{1.0 / 6.0, 0.5, 1.0 / 18.0, 1.0 / 18.0, 1.0 / 18.0};
  return {(1.0 - x) * uniform.lambda0_plus + x * target.lambda0_plus,
          (1.0 - x) * uniform.lambda0_minus + x * target.lambda0_minus,
          (1.0 - x) * uniform.lambda1 + x * target.lambda1,
          (1.0 - x) * uniform.lambda2 + x * target.lambda2,
          (1.0 - x) * uniform.lambda3 + x * target.lambda3};
}

inline DensityMatrix sweep_state(SweepFamily family, double x) {
  require(std::isfinite(x) && x >= 0.0 && x <= 1.0, "sweep: x must lie in [0, 1]");
  switch (family) {
    case SweepFamily::dct:
      return dct_state(dct_sweep_params(x));
    case SweepFamily::depol333:
      return depolarized_ghz_333(x);
  }
  throw invalid_input("sweep: unknown family");
}

struct SweepOptions {
  SweepFamily family = SweepFamily::depol333;
  double start = 0.0;
  double stop = 1.0;
  int steps = 2;
  std::string method = "hierarchy";  // "theorem2" or "hierarchy"
  int m = 2;
  bool parallel = false;
};

struct SweepRow {
  double x = 0.0;
  double bound = 0.0;
  double pt_sum = 0.0;
  double realign_sum = 0.0;
};

inline SweepRow evaluate_sweep_point(const SweepOptions& opt, double x) {
  const DensityMatrix rho = sweep_state(opt.family, x);
  BoundReport report;
  if (opt.method == "theorem2") {
    report = three_qubit_bound(rho);
  } else if (opt.method == "hierarchy") {
    report = hierarchy_bound(rho, opt.m, theorem2_inner(), opt.parallel);
  } else {
    throw invalid_input("sweep: method must be theorem2 or hierarchy");
  }
  return {x, report.value, report.pt_sum, report.realign_sum};
}

inline std::vector<SweepRow> run_sweep(const SweepOptions& opt) {
  require(opt.steps >= 2, "sweep: need at least 2 steps");
  require(std::isfinite(opt.start) && std::isfinite(opt.stop) && opt.start < opt.stop,
          "sweep: need start < stop");
  std::vector<double> grid(static_cast<std::size_t>(opt.steps));
  for (int k = 0; k < opt.steps; ++k) {
    grid[static_cast<std::size_t>(k)] = opt.start + k * (opt.stop - opt.start) / (opt.steps - 1);
  }
  std::vector<SweepRow> rows(grid.size());
  if (!opt.parallel) {
    for (std::size_t i = 0; i < grid.size(); ++i) rows[i] = evaluate_sweep_point(opt, grid[i]);
  } else {
    std::exception_ptr first_error;
    std::mutex mu;
    const unsigned workers = std::max(
        1u, std::min(std::thread::hardware_concurrency(), static_cast<unsigned>(grid.size())));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < grid.size(); i += workers) {
            rows[i] = evaluate_sweep_point(opt, grid[i]);
          }
        } catch (...) {
          const std::lock_guard<std::mutex> lock(mu);
          if (!first_error) first_error = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }
  return rows;
}

// Shortest decimal representation that round-trips the double exactly.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "x,bound,pt_sum,realign_sum\n";
  for (const auto& r : rows) {
    out += format_double(r.x);
    out += ',';
    out += format_double(r.bound);
    out += ',';
    out += format_double(r.pt_sum);
    out += ',';
    out += format_double(r.realign_sum);
    out += '\n';
  }
  return out;
}

inline void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), "cannot write sweep output: " + path);
  out << sweep_csv(rows);
  out.flush();
  require(out.good(), "write failed: " + path);
}

}  // namespace qconc
