#pragma once

// Lower bounds on mixed-state concurrence.
//
// three_qubit_bound: operational 2x2x2 bound. For each subsystem j the
// partial-transpose and realignment trace norms are compared against the
// input trace t; the squared per-j term is the larger clamped deficit
// max(0, ||.|| - t)^2 and the squared bound is the sum over j. On a
// unit-trace input this is the plain (||.|| - 1)^2 criterion; on
// unnormalized sub-states the trace replaces 1 and clamping removes
// spurious positives on separable states.
//
// hierarchy_bound: squared bound = c * sum over all m-subset sub-states of
// the squared inner bound, where 1/c = C(N-1,m-1)^(n-2) * C(N-2,m-2)^2 is
// the largest number of sub-states a single nonvanishing minor term can
// appear in: the distinguished slot and one further slot carry distinct
// index pairs (C(N-2,m-2) sub-states each) and up to n-2 slots coincide
// (C(N-1,m-1) each).

#include "qconc/concurrence.hpp"
#include "qconc/tensor_ops.hpp"

#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace qconc {

struct Coefficient {
  std::uint64_t numerator = 1;
  std::uint64_t denominator = 1;
  int N = 0;
  int m = 0;
  int parties = 0;

  double value() const {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  std::string to_string() const {
    return std::to_string(numerator) + "/" + std::to_string(denominator);
  }
};

namespace detail {
inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  require(b == 0 || a <= UINT64_MAX / b, "coefficient denominator overflows 64 bits");
  return a * b;
}

inline std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}
}  // namespace detail

inline Coefficient substate_coefficient(int N, int m, int parties) {
  require(parties >= 3, "substate_coefficient: need at least three subsystems");
  require(m >= 2, "substate_coefficient: need m >= 2");
  require(m <= N, "substate_coefficient: need m <= N");
  Coefficient c;
  c.N = N;
  c.m = m;
  c.parties = parties;
  c.numerator = 1;
  c.denominator = detail::checked_mul(detail::checked_pow(binomial(N - 1, m - 1), parties - 2),
                                      detail::checked_pow(binomial(N - 2, m - 2), 2));
  return c;
}

struct SubstateContribution {
  SubstateSelector selector;
  double trace = 0.0;
  std::vector<double> pt_deficit;       // per subsystem, max(0, ||rho^T_j|| - t)
  std::vector<double> realign_deficit;  // per subsystem, max(0, ||R_j|| - t)
  double bound_squared = 0.0;           // inner squared bound, unweighted
};

struct ConvexComponent {
  int m = 0;
  double weight = 0.0;
  double value_squared = 0.0;
  Coefficient coefficient;
};

struct BoundReport {
  std::string method;
  double value = 0.0;
  double value_squared = 0.0;
  std::optional<Coefficient> coefficient;
  std::vector<SubstateContribution> per_substate;
  std::vector<ConvexComponent> components;  // convex combinations only
  double pt_sum = 0.0;       // weighted sum of squared partial-transpose deficits
  double realign_sum = 0.0;  // weighted sum of squared realignment deficits
};

inline BoundReport three_qubit_bound(const Matrix& rho, const SystemDims& dims) {
  require(dims.parties() == 3 && dims.dims() == std::vector<int>{2, 2, 2},
          "three_qubit_bound: dims must be 2x2x2");
  detail::check_multipartite(rho, dims, "three_qubit_bound");
  require((rho - rho.adjoint()).cwiseAbs().maxCoeff() <= tol::hermiticity,
          "three_qubit_bound: input not Hermitian within tolerance");
  const double t = rho.trace().real();
  require(t > 0.0 && t <= 1.0 + tol::trace_slack,
          "three_qubit_bound: trace must lie in (0, 1]");

  SubstateContribution contribution;
  contribution.selector = full_selector(dims);
  contribution.trace = t;
  double vs = 0.0;
  double pt_sum = 0.0;
  double rl_sum = 0.0;
  for (int j = 0; j < 3; ++j) {
    const double pt_def = std::max(0.0, trace_norm(partial_transpose(rho, dims, j)) - t);
    const double rl_def = std::max(0.0, trace_norm(realign(rho, dims, j)) - t);
    contribution.pt_deficit.push_back(pt_def);
    contribution.realign_deficit.push_back(rl_def);
    const double term = std::max(pt_def, rl_def);
    vs += term * term;
    pt_sum += pt_def * pt_def;
    rl_sum += rl_def * rl_def;
  }
  contribution.bound_squared = vs;

  BoundReport report;
  report.method = "theorem2";
  report.value_squared = vs;
  report.value = std::sqrt(vs);
  report.coefficient = Coefficient{1, 1, 2, 2, 3};
  report.per_substate.push_back(std::move(contribution));
  report.pt_sum = pt_sum;
  report.realign_sum = rl_sum;
  return report;
}

inline BoundReport three_qubit_bound(const DensityMatrix& rho) {
  return three_qubit_bound(rho.matrix(), rho.dims());
}

// A lower bound on the concurrence of an (unnormalized) sub-state, given
// its matrix and re-indexed dims.
using InnerBound = std::function<BoundReport(const Matrix&, const SystemDims&)>;

inline InnerBound theorem2_inner() {
  return [](const Matrix& rho, const SystemDims& dims) { return three_qubit_bound(rho, dims); };
}

inline BoundReport hierarchy_bound(const DensityMatrix& rho, int m,
                                   const InnerBound& inner = theorem2_inner(),
                                   bool parallel = false) {
  const SystemDims& dims = rho.dims();
  require(dims.all_equal(), "hierarchy_bound: equal subsystem dimensions required");
  const int N = dims.dim(0);
  require(m >= 2 && m <= N, "hierarchy_bound: need 2 <= m <= N");
  const Coefficient coeff = substate_coefficient(N, m, dims.parties());
  const auto selectors = enumerate_selectors(dims, m);

  std::vector<SubstateContribution> contributions(selectors.size());
  double inner_sum = 0.0;
  double pt_sum = 0.0;
  double rl_sum = 0.0;

  const auto evaluate = [&](std::size_t i) {
    const auto& sel = selectors[i];
    auto [sub, sub_dims] = project_substate(rho.matrix(), dims, sel);
    SubstateContribution contribution;
    contribution.selector = sel;
    contribution.trace = sub.trace().real();
    if (contribution.trace <= tol::zero_trace) {
      // Projection missed the state's support; the zero sub-state
      // contributes nothing.
      contribution.trace = std::max(contribution.trace, 0.0);
      contribution.pt_deficit.assign(static_cast<std::size_t>(dims.parties()), 0.0);
      contribution.realign_deficit.assign(static_cast<std::size_t>(dims.parties()), 0.0);
      contribution.bound_squared = 0.0;
      return contribution;
    }
    BoundReport rep;
    try {
      rep = inner(sub, sub_dims);
    } catch (const invalid_input& e) {
      throw invalid_input(std::string(e.what()) + " [sub-state " + sel.to_string() + "]");
    }
    contribution.pt_deficit = rep.per_substate.empty() ? std::vector<double>()
                                                       : rep.per_substate.front().pt_deficit;
    contribution.realign_deficit = rep.per_substate.empty()
                                       ? std::vector<double>()
                                       : rep.per_substate.front().realign_deficit;
    contribution.bound_squared = rep.value_squared;
    return contribution;
  };

  const auto accumulate = [&](const SubstateContribution& contribution) {
    inner_sum += contribution.bound_squared;
    for (double d : contribution.pt_deficit) pt_sum += d * d;
    for (double d : contribution.realign_deficit) rl_sum += d * d;
  };

  if (!parallel) {
    // Deterministic sequential reduction in selector order.
    for (std::size_t i = 0; i < selectors.size(); ++i) {
      contributions[i] = evaluate(i);
      accumulate(contributions[i]);
    }
  } else {
    std::mutex mu;
    std::exception_ptr first_error;
    const unsigned workers =
        std::max(1u, std::min(std::thread::hardware_concurrency(),
                              static_cast<unsigned>(selectors.size())));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        double local_inner = 0.0, local_pt = 0.0, local_rl = 0.0;
        try {
          for (std::size_t i = w; i < selectors.size(); i += workers) {
            contributions[i] = evaluate(i);
            local_inner += contributions[i].bound_squared;
            for (double d : contributions[i].pt_deficit) local_pt += d * d;
            for (double d : contributions[i].realign_deficit) local_rl += d * d;
          }
          const std::lock_guard<std::mutex> lock(mu);
          inner_sum += local_inner;
          pt_sum += local_pt;
          rl_sum += local_rl;
        } catch (...) {
          const std::lock_guard<std::mutex> lock(mu);
          if (!first_error) first_error = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  BoundReport report;
  report.method = "hierarchy";
  report.coefficient = coeff;
  report.value_squared = coeff.value() * inner_sum;
  report.value = std::sqrt(report.value_squared);
  report.per_substate = std::move(contributions);
  report.pt_sum = coeff.value() * pt_sum;
  report.realign_sum = coeff.value() * rl_sum;
  return report;
}

// Convex combination over sub-state sizes m: squared bound
// sum_m p_m * hierarchy(m)^2 with nonnegative weights summing to one.
inline BoundReport convex_combination_bound(const DensityMatrix& rho,
                                            const std::vector<std::pair<int, double>>& weights,
                                            const InnerBound& inner = theorem2_inner(),
                                            bool parallel = false) {
  require(!weights.empty(), "convex_combination_bound: no weights given");
  const int N = rho.dims().all_equal() ? rho.dims().dim(0) : 0;
  require(N >= 2, "convex_combination_bound: equal subsystem dimensions required");
  double wsum = 0.0;
  std::vector<int> seen;
  for (const auto& [m, w] : weights) {
    require(m >= 2 && m <= N, "convex_combination_bound: weight on m outside {2,...,N}");
    require(std::isfinite(w) && w >= 0.0, "convex_combination_bound: weights must be nonnegative");
    for (int s : seen) require(s != m, "convex_combination_bound: duplicate weight for one m");
    seen.push_back(m);
    wsum += w;
  }
  require(std::abs(wsum - 1.0) <= tol::simplex, "convex_combination_bound: weights must sum to 1");

  BoundReport report;
  report.method = "convex-combination";
  for (const auto& [m, w] : weights) {
    if (w == 0.0) continue;
    const BoundReport part = hierarchy_bound(rho, m, inner, parallel);
    report.value_squared += w * part.value_squared;
    report.pt_sum += w * part.pt_sum;
    report.realign_sum += w * part.realign_sum;
    report.components.push_back({m, w, part.value_squared, *part.coefficient});
  }
  report.value = std::sqrt(report.value_squared);
  return report;
}

struct PureHierarchyCheck {
  double lhs_squared = 0.0;  // squared concurrence of the full state
  double rhs_squared = 0.0;  // coefficient-weighted sum over sub-state vectors
};

// Pure-state form of the hierarchy inequality: lhs >= rhs must hold for
// every normalized pure state. Both sides use the homogeneous minor form;
// sub-state vectors stay unnormalized.
inline PureHierarchyCheck pure_hierarchy_check(const PureState& psi, int m) {
  require(psi.normalized(), "pure_hierarchy_check: input must be normalized");
  const SystemDims& dims = psi.dims();
  require(dims.all_equal(), "pure_hierarchy_check: equal subsystem dimensions required");
  const int N = dims.dim(0);
  require(m >= 2 && m <= N, "pure_hierarchy_check: need 2 <= m <= N");
  const Coefficient coeff = substate_coefficient(N, m, dims.parties());

  PureHierarchyCheck out;
  out.lhs_squared = minor_concurrence_squared(psi.amplitudes(), dims);
  const SystemDims sub_dims = SystemDims::uniform(dims.parties(), m);
  const auto strides = dims.strides();
  double sum = 0.0;
  for (const auto& sel : enumerate_selectors(dims, m)) {
    Vector sub(sub_dims.total());
    for (Index f = 0; f < sub.size(); ++f) {
      const auto idx = unflatten(f, sub_dims);
      Index full = 0;
      for (int k = 0; k < dims.parties(); ++k) {
        full += static_cast<Index>(
                    sel.subsets[static_cast<std::size_t>(k)][static_cast<std::size_t>(
                        idx[static_cast<std::size_t>(k)])]) *
                strides[static_cast<std::size_t>(k)];
      }
      sub(f) = psi.amplitudes()(full);
    }
    sum += minor_concurrence_squared(sub, sub_dims);
  }
  out.rhs_squared = coeff.value() * sum;
  return out;
}

}  // namespace qconc
