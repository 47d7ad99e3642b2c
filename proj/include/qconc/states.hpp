#pragma once

// Validated state containers and the state families used by the bounds:
// GHZ pairs, the Dur-Cirac-Tarrach three-qubit family, the depolarized
// 3x3x3 GHZ family, and seeded random test states.

#include "qconc/random.hpp"
#include "qconc/system_dims.hpp"

#include <Eigen/Eigenvalues>

#include <cstdint>
#include <utility>
#include <vector>

namespace qconc {

class PureState {
 public:
  PureState(Vector amplitudes, SystemDims dims)
      : amplitudes_(std::move(amplitudes)), dims_(std::move(dims)) {
    require(amplitudes_.size() == dims_.total(),
            "PureState: amplitude count does not match dims " + dims_.to_string());
    require(amplitudes_.allFinite(), "PureState: non-finite amplitudes");
    norm_squared_ = amplitudes_.squaredNorm();
    require(norm_squared_ > 0.0, "PureState: zero vector");
    require(norm_squared_ <= 1.0 + tol::norm_slack, "PureState: norm^2 exceeds 1");
    normalized_ = std::abs(norm_squared_ - 1.0) <= tol::norm_slack;
  }

  const Vector& amplitudes() const { return amplitudes_; }
  const SystemDims& dims() const { return dims_; }
  bool normalized() const { return normalized_; }
  double norm_squared() const { return norm_squared_; }

 private:
  Vector amplitudes_;
  SystemDims dims_;
  double norm_squared_ = 0.0;
  bool normalized_ = false;
};

class DensityMatrix {
 public:
  DensityMatrix(Matrix matrix, SystemDims dims)
      : matrix_(std::move(matrix)), dims_(std::move(dims)) {
    require(matrix_.rows() == matrix_.cols(), "DensityMatrix: matrix must be square");
    require(matrix_.rows() == dims_.total(),
            "DensityMatrix: dims " + dims_.to_string() + " do not match matrix size");
    require(all_finite(matrix_), "DensityMatrix: non-finite entries");
    const double herm = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
    require(herm <= tol::hermiticity, "DensityMatrix: not Hermitian within tolerance");
    trace_ = matrix_.trace().real();
    require(trace_ > 0.0 && trace_ <= 1.0 + tol::trace_slack,
            "DensityMatrix: trace must lie in (0, 1]");
    Eigen::SelfAdjointEigenSolver<Matrix> es(matrix_, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
      throw numerical_error("DensityMatrix: eigenvalue computation failed");
    }
    require(es.eigenvalues().minCoeff() >= tol::psd_floor,
            "DensityMatrix: not positive semidefinite within tolerance");
  }

  static DensityMatrix from_pure(const PureState& psi) {
    require(psi.normalized(), "DensityMatrix::from_pure: state must be normalized");
    Matrix rho = psi.amplitudes() * psi.amplitudes().adjoint();
    return DensityMatrix(std::move(rho), psi.dims());
  }

  const Matrix& matrix() const { return matrix_; }
  const SystemDims& dims() const { return dims_; }
  double trace() const { return trace_; }

 private:
  Matrix matrix_;
  SystemDims dims_;
  double trace_ = 0.0;
};

inline PureState pure_from_amplitudes(Vector amplitudes, SystemDims dims, bool normalize = false) {
  require(amplitudes.size() == dims.total(), "pure_from_amplitudes: length mismatch");
  require(amplitudes.allFinite(), "pure_from_amplitudes: non-finite amplitudes");
  const double n2 = amplitudes.squaredNorm();
  require(n2 > 0.0, "pure_from_amplitudes: zero vector");
  if (normalize) amplitudes /= std::sqrt(n2);
  return PureState(std::move(amplitudes), std::move(dims));
}

// (|aa...a> + |bb...b>)/sqrt(2).
inline PureState ghz_pair(const SystemDims& dims, int level_a, int level_b) {
  require(level_a != level_b, "ghz_pair: levels must differ");
  for (int k = 0; k < dims.parties(); ++k) {
    require(level_a >= 0 && level_a < dims.dim(k) && level_b >= 0 && level_b < dims.dim(k),
            "ghz_pair: level out of range for subsystem " + std::to_string(k));
  }
  Vector amps = Vector::Zero(dims.total());
  const std::vector<int> ia(static_cast<std::size_t>(dims.parties()), level_a);
  const std::vector<int> ib(static_cast<std::size_t>(dims.parties()), level_b);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  amps(flat_index(ia, dims)) = inv_sqrt2;
  amps(flat_index(ib, dims)) = inv_sqrt2;
  return PureState(std::move(amps), dims);
}

struct DctParams {
  double lambda0_plus = 0.0;
  double lambda0_minus = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda3 = 0.0;

  void validate() const {
    for (double v : {lambda0_plus, lambda0_minus, lambda1, lambda2, lambda3}) {
      require(std::isfinite(v) && v >= 0.0, "DctParams: weights must be nonnegative");
    }
    const double sum = lambda0_plus + lambda0_minus + 2.0 * (lambda1 + lambda2 + lambda3);
    require(std::abs(sum - 1.0) <= tol::simplex,
            "DctParams: lambda0+ + lambda0- + 2(lambda1+lambda2+lambda3) must equal 1");
  }
};

// GHZ-diagonal three-qubit mixture. The eight eigenvectors are
// (|j1 j2 0> +- |(3-j)1 (3-j)2 1>)/sqrt(2) for j = j1j2 in {0,..,3} binary,
// i.e. flat basis pairs (2j, 2(3-j)+1).
inline DensityMatrix dct_state(const DctParams& p) {
  p.validate();
  const SystemDims dims = SystemDims::uniform(3, 2);
  Matrix rho = Matrix::Zero(8, 8);
  const double weight_plus[4] = {p.lambda0_plus, p.lambda1, p.lambda2, p.lambda3};
  const double weight_minus[4] = {p.lambda0_minus, p.lambda1, p.lambda2, p.lambda3};
  for (int j = 0; j < 4; ++j) {
    const Index u = 2 * j;
    const Index v = 2 * (3 - j) + 1;
    const double wp = weight_plus[j];
    const double wm = weight_minus[j];
    rho(u, u) += 0.5 * (wp + wm);
    rho(v, v) += 0.5 * (wp + wm);
    rho(u, v) += 0.5 * (wp - wm);
    rho(v, u) += 0.5 * (wp - wm);
  }
  return DensityMatrix(std::move(rho), dims);
}

// (1-x)/27 * I + x |ghz(0,2)><ghz(0,2)| on 3x3x3.
inline DensityMatrix depolarized_ghz_333(double x) {
  require(std::isfinite(x) && x >= 0.0 && x <= 1.0, "depolarized_ghz_333: x must lie in [0, 1]");
  const SystemDims dims = SystemDims::uniform(3, 3);
  const PureState ghz = ghz_pair(dims, 0, 2);
  Matrix rho = ((1.0 - x) / 27.0) * Matrix::Identity(27, 27);
  rho += x * (ghz.amplitudes() * ghz.amplitudes().adjoint());
  return DensityMatrix(std::move(rho), dims);
}

// Haar-uniform pure state: i.i.d. standard complex Gaussian amplitudes,
// normalized. Deterministic for a fixed seed.
inline PureState random_pure(const SystemDims& dims, std::uint64_t seed) {
  Rng rng(seed);
  Vector amps(dims.total());
  for (Index i = 0; i < amps.size(); ++i) amps(i) = rng.complex_gaussian();
  amps /= amps.norm();
  return PureState(std::move(amps), dims);
}

// Mixture of k random product pure states with random simplex weights.
inline DensityMatrix random_separable(const SystemDims& dims, int k, std::uint64_t seed) {
  require(k >= 1, "random_separable: mixture size must be at least 1");
  Rng rng(seed);
  std::vector<double> weights(static_cast<std::size_t>(k));
  double wsum = 0.0;
  for (double& w : weights) {
    w = -std::log(rng.uniform());
    wsum += w;
  }
  Matrix rho = Matrix::Zero(dims.total(), dims.total());
  for (int i = 0; i < k; ++i) {
    Vector product = Vector::Ones(1);
    for (int s = 0; s < dims.parties(); ++s) {
      Vector factor(dims.dim(s));
      for (Index a = 0; a < factor.size(); ++a) factor(a) = rng.complex_gaussian();
      factor /= factor.norm();
      Vector next(product.size() * factor.size());
      for (Index u = 0; u < product.size(); ++u) {
        for (Index v = 0; v < factor.size(); ++v) {
          next(u * factor.size() + v) = product(u) * factor(v);
        }
      }
      product = std::move(next);
    }
    rho += (weights[static_cast<std::size_t>(i)] / wsum) * (product * product.adjoint());
  }
  return DensityMatrix(std::move(rho), dims);
}

}  // namespace qconc
