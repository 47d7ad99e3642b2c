#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace qconc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

// Argument violates a documented precondition.
struct invalid_input : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A matrix decomposition failed to converge or a value left its admissible range.
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace tol {
inline constexpr double hermiticity = 1e-10;     // max |rho - rho^dag| entry
inline constexpr double psd_floor = -1e-9;       // smallest admissible eigenvalue
inline constexpr double trace_slack = 1e-9;      // trace may exceed 1 by this much
inline constexpr double norm_slack = 1e-9;       // |norm^2 - 1| window for "normalized"
inline constexpr double simplex = 1e-12;         // mixture weights must sum to 1
inline constexpr double radicand_floor = -1e-10; // clamp window before sqrt
inline constexpr double zero_trace = 1e-14;      // sub-states below this count as zero
}  // namespace tol

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw invalid_input(msg);
}

inline bool all_finite(const Matrix& m) { return m.allFinite(); }

// sqrt with the tiny-negative window clamped to zero.
inline double clamped_sqrt(double x) {
  if (x < 0.0) {
    if (x < tol::radicand_floor) {
      throw numerical_error("radicand " + std::to_string(x) + " below clamp window");
    }
    x = 0.0;
  }
  return std::sqrt(x);
}

}  // namespace qconc
