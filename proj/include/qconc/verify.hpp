#pragma once

// Built-in verification suite: seeded property checks over random states.
// Every failure line echoes the derived per-case seed and the inputs needed
// to reproduce it.

#include "qconc/bounds.hpp"
#include "qconc/concurrence.hpp"
#include "qconc/states.hpp"
#include "qconc/tensor_ops.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qconc {

struct VerifyOptions {
  int trials = 100;
  std::uint64_t seed = 20260808ULL;
  // Test hook: scales the hierarchy coefficient inside the pure-state
  // hierarchy check, so the suite can be shown to catch a wrong constant.
  bool inject_coefficient_fault = false;
};

struct VerifyResult {
  int checks = 0;
  int failures = 0;
  std::vector<std::string> lines;
  bool passed() const { return failures == 0; }
};

namespace detail {
inline void finish_check(VerifyResult& result, const std::string& name, int cases,
                         const std::vector<std::string>& failures) {
  ++result.checks;
  if (failures.empty()) {
    result.lines.push_back("ok   " + name + " (" + std::to_string(cases) + " cases)");
  } else {
    ++result.failures;
    result.lines.push_back("FAIL " + name + " (" + std::to_string(failures.size()) + " of " +
                           std::to_string(cases) + " cases)");
    for (std::size_t i = 0; i < failures.size() && i < 5; ++i) {
      result.lines.push_back("     " + failures[i]);
    }
  }
}
}  // namespace detail

inline VerifyResult run_verification(const VerifyOptions& opt) {
  require(opt.trials >= 1, "verify: need at least one trial");
  VerifyResult result;

  // Purity form and minor form agree on normalized tripartite states.
  {
    std::vector<std::string> bad;
    const int dims_cycle[3] = {2, 3, 4};
    for (int i = 0; i < opt.trials; ++i) {
      const int N = dims_cycle[i % 3];
      const std::uint64_t s = derive_seed(opt.seed, 1, static_cast<std::uint64_t>(i));
      const PureState psi = random_pure(SystemDims::uniform(3, N), s);
      const double a = pure_concurrence_purity(psi).value;
      const double b = pure_concurrence_minors(psi).value;
      if (std::abs(a - b) > 1e-9) {
        bad.push_back("case=" + std::to_string(i) + " seed=" + std::to_string(s) +
                      " N=" + std::to_string(N) + " purity=" + std::to_string(a) +
                      " minors=" + std::to_string(b));
      }
    }
    detail::finish_check(result, "form-equivalence", opt.trials, bad);
  }

  // For pure three-qubit states, 1 - Tr rho_j^2 equals half the squared
  // partial-transpose deficit and half the squared realignment deficit.
  {
    std::vector<std::string> bad;
    const SystemDims dims = SystemDims::uniform(3, 2);
    for (int i = 0; i < opt.trials; ++i) {
      const std::uint64_t s = derive_seed(opt.seed, 2, static_cast<std::uint64_t>(i));
      const PureState psi = random_pure(dims, s);
      const Matrix rho = psi.amplitudes() * psi.amplitudes().adjoint();
      for (int j = 0; j < 3; ++j) {
        const Matrix marginal = partial_trace(rho, dims, j);
        const double lin = 1.0 - (marginal * marginal).trace().real();
        const double pt = trace_norm(partial_transpose(rho, dims, j)) - 1.0;
        const double rl = trace_norm(realign(rho, dims, j)) - 1.0;
        if (std::abs(lin - 0.5 * pt * pt) > 1e-9 || std::abs(lin - 0.5 * rl * rl) > 1e-9) {
          bad.push_back("case=" + std::to_string(i) + " seed=" + std::to_string(s) +
                        " j=" + std::to_string(j) + " linear-entropy=" + std::to_string(lin) +
                        " pt-deficit=" + std::to_string(pt) + " realign-deficit=" + std::to_string(rl));
        }
      }
    }
    detail::finish_check(result, "trace-norm-identities", opt.trials, bad);
  }

  // Pure-state hierarchy inequality lhs >= rhs across (N, m) choices.
  {
    std::vector<std::string> bad;
    const int cases_nm[3][2] = {{3, 2}, {4, 2}, {4, 3}};
    const double fault_scale = opt.inject_coefficient_fault ? 4.0 : 1.0;
    for (int i = 0; i < opt.trials; ++i) {
      const int N = cases_nm[i % 3][0];
      const int m = cases_nm[i % 3][1];
      const std::uint64_t s = derive_seed(opt.seed, 3, static_cast<std::uint64_t>(i));
      const PureState psi = random_pure(SystemDims::uniform(3, N), s);
      const PureHierarchyCheck check = pure_hierarchy_check(psi, m);
      const double rhs = fault_scale * check.rhs_squared;
      if (check.lhs_squared < rhs - 1e-9) {
        bad.push_back("case=" + std::to_string(i) + " seed=" + std::to_string(s) +
                      " N=" + std::to_string(N) + " m=" + std::to_string(m) +
                      " lhs^2=" + std::to_string(check.lhs_squared) +
                      " rhs^2=" + std::to_string(rhs));
      }
    }
    detail::finish_check(result, "pure-hierarchy-inequality", opt.trials, bad);
  }

  // Separable states are never flagged.
  {
    std::vector<std::string> bad;
    for (int i = 0; i < opt.trials; ++i) {
      const std::uint64_t s = derive_seed(opt.seed, 4, static_cast<std::uint64_t>(i));
      const int k = 1 + static_cast<int>(s % 5);
      if (i % 2 == 0) {
        const DensityMatrix rho = random_separable(SystemDims::uniform(3, 2), k, s);
        const double v = three_qubit_bound(rho).value;
        if (v > 1e-9) {
          bad.push_back("case=" + std::to_string(i) + " seed=" + std::to_string(s) +
                        " dims=2x2x2 k=" + std::to_string(k) + " bound=" + std::to_string(v));
        }
      } else {
        const DensityMatrix rho = random_separable(SystemDims::uniform(3, 3), k, s);
        const double v = hierarchy_bound(rho, 2).value;
        if (v > 1e-9) {
          bad.push_back("case=" + std::to_string(i) + " seed=" + std::to_string(s) +
                        " dims=3x3x3 k=" + std::to_string(k) + " m=2 bound=" + std::to_string(v));
        }
      }
    }
    detail::finish_check(result, "separable-nullity", opt.trials, bad);
  }

  // Lower bounds never exceed the sampled convex-roof upper estimate.
  {
    std::vector<std::string> bad;
    const int cases = std::min(opt.trials, 10);
    for (int i = 0; i < cases; ++i) {
      const std::uint64_t s = derive_seed(opt.seed, 5, static_cast<std::uint64_t>(i));
      if (i % 2 == 0) {
        const SystemDims dims = SystemDims::uniform(3, 2);
        Matrix rho = Matrix::Zero(8, 8);
        for (int term = 0; term < 4; ++term) {
          const PureState psi = random_pure(dims, derive_seed(s, 50, static_cast<std::uint64_t>(term)));
          rho += 0.25 * (psi.amplitudes() * psi.amplitudes().adjoint());
        }
        const DensityMatrix mixed(std::move(rho), dims);
        const double lower = three_qubit_bound(mixed).value;
        const double upper = convex_roof_upper_estimate(mixed, 60, s);
        if (lower > upper + 1e-8) {
          bad.push_back("case=" + std::to_string(i) + " seed=" + std::to_string(s) +
                        " dims=2x2x2 lower=" + std::to_string(lower) +
                        " upper=" + std::to_string(upper));
        }
      } else {
        const SystemDims dims = SystemDims::uniform(3, 3);
        Matrix rho = Matrix::Zero(27, 27);
        for (int term = 0; term < 4; ++term) {
          const PureState psi = random_pure(dims, derive_seed(s, 50, static_cast<std::uint64_t>(term)));
          rho += 0.25 * (psi.amplitudes() * psi.amplitudes().adjoint());
        }
        const DensityMatrix mixed(std::move(rho), dims);
        const double lower = hierarchy_bound(mixed, 2).value;
        const double upper = convex_roof_upper_estimate(mixed, 40, s);
        if (lower > upper + 1e-8) {
          bad.push_back("case=" + std::to_string(i) + " seed=" + std::to_string(s) +
                        " dims=3x3x3 m=2 lower=" + std::to_string(lower) +
                        " upper=" + std::to_string(upper));
        }
      }
    }
    detail::finish_check(result, "sandwich", cases, bad);
  }

  return result;
}

}  // namespace qconc
