#pragma once

// Concurrence of pure states in two equivalent forms, and a sampled
// upper estimate of the mixed-state convex roof.
//
// Purity form (three subsystems, normalized input):
//   C = sqrt(6 - 2*(Tr rho_1^2 + Tr rho_2^2 + Tr rho_3^2)).
// Minor form (any number of subsystems, degree-2 homogeneous in the
// amplitudes): for each distinguished subsystem, sum |2x2 minor|^2 of the
// amplitude matricization over all row and column pairs. Each unordered
// minor is enumerated once and carries weight 4, its multiplicity in the
// sum over ordered index tuples; with that weight the two forms agree.

#include "qconc/states.hpp"
#include "qconc/system_dims.hpp"

#include <algorithm>
#include <cstdint>

namespace qconc {

enum class ConcurrenceForm { purity, minors };

struct ConcurrenceValue {
  double value = 0.0;
  ConcurrenceForm form = ConcurrenceForm::purity;
  bool normalized_input = true;
};

// Optional dimension-dependent normalization sqrt(N / (6(N-1))) for
// three equal N-dimensional subsystems. Not applied by default.
inline double n_dependent_prefactor(int N) {
  require(N >= 2, "n_dependent_prefactor: need N >= 2");
  return std::sqrt(static_cast<double>(N) / (6.0 * (N - 1)));
}

namespace detail {
// Amplitude matricization: rows over subsystem `slot`, columns over the
// complement in row-major order.
inline Matrix matricize(const Vector& amps, const SystemDims& dims, int slot) {
  const Index d = dims.dim(slot);
  const Index cols = dims.total() / d;
  const Index stride = dims.strides()[static_cast<std::size_t>(slot)];
  const auto emb = complement_embedding(dims, slot);
  Matrix a(d, cols);
  for (Index beta = 0; beta < d; ++beta) {
    for (Index b = 0; b < cols; ++b) a(beta, b) = amps(beta * stride + emb[static_cast<std::size_t>(b)]);
  }
  return a;
}
}  // namespace detail

// Squared minor-form concurrence of a (possibly unnormalized) amplitude
// vector. Homogeneous of degree 4 in the amplitudes.
inline double minor_concurrence_squared(const Vector& amps, const SystemDims& dims) {
  require(amps.size() == dims.total(), "minor_concurrence_squared: length mismatch");
  require(amps.allFinite(), "minor_concurrence_squared: non-finite amplitudes");
  double total = 0.0;
  for (int slot = 0; slot < dims.parties(); ++slot) {
    const Matrix a = detail::matricize(amps, dims, slot);
    const Index rows = a.rows();
    const Index cols = a.cols();
    for (Index beta = 0; beta < rows; ++beta) {
      for (Index beta2 = beta + 1; beta2 < rows; ++beta2) {
        for (Index b = 0; b < cols; ++b) {
          for (Index b2 = b + 1; b2 < cols; ++b2) {
            const Complex det = a(beta, b) * a(beta2, b2) - a(beta, b2) * a(beta2, b);
            total += 4.0 * std::norm(det);
          }
        }
      }
    }
  }
  return total;
}

inline double minor_concurrence(const Vector& amps, const SystemDims& dims) {
  return std::sqrt(minor_concurrence_squared(amps, dims));
}

inline ConcurrenceValue pure_concurrence_purity(const PureState& psi, bool apply_prefactor = false) {
  require(psi.dims().parties() == 3, "pure_concurrence_purity: exactly three subsystems required");
  require(psi.normalized(),
          "pure_concurrence_purity: input must be normalized (use the minor form for sub-state vectors)");
  double purity_sum = 0.0;
  for (int slot = 0; slot < 3; ++slot) {
    const Matrix a = detail::matricize(psi.amplitudes(), psi.dims(), slot);
    const Matrix g = a * a.adjoint();
    purity_sum += g.squaredNorm();  // Tr g^2 for Hermitian g
  }
  double value = clamped_sqrt(6.0 - 2.0 * purity_sum);
  if (apply_prefactor) {
    require(psi.dims().all_equal(), "pure_concurrence_purity: prefactor needs equal dimensions");
    value *= n_dependent_prefactor(psi.dims().dim(0));
  }
  return {value, ConcurrenceForm::purity, true};
}

inline ConcurrenceValue pure_concurrence_minors(const PureState& psi, bool apply_prefactor = false) {
  double value = minor_concurrence(psi.amplitudes(), psi.dims());
  if (apply_prefactor) {
    require(psi.dims().parties() == 3 && psi.dims().all_equal(),
            "pure_concurrence_minors: prefactor is defined for three equal subsystems");
    value *= n_dependent_prefactor(psi.dims().dim(0));
  }
  return {value, ConcurrenceForm::minors, psi.normalized()};
}

// Upper estimate of the convex-roof concurrence: the minimum ensemble
// average over sampled pure-state decompositions. Decompositions are built
// from the eigendecomposition mixed by random isometries, which reaches
// every decomposition; the eigendecomposition itself is trial 0, so a pure
// input returns its exact concurrence. Running minimum, hence
// non-increasing in `trials` for a fixed seed.
inline double convex_roof_upper_estimate(const DensityMatrix& rho, int trials, std::uint64_t seed) {
  require(trials >= 1, "convex_roof_upper_estimate: need at least one trial");
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix());
  if (es.info() != Eigen::Success) {
    throw numerical_error("convex_roof_upper_estimate: eigendecomposition failed");
  }
  const Index n = rho.matrix().rows();
  std::vector<Index> kept;
  for (Index i = 0; i < n; ++i) {
    if (es.eigenvalues()(i) > 1e-12) kept.push_back(i);
  }
  if (kept.empty()) return 0.0;
  const Index rank = static_cast<Index>(kept.size());
  Matrix base(n, rank);
  for (Index c = 0; c < rank; ++c) {
    base.col(c) = std::sqrt(es.eigenvalues()(kept[static_cast<std::size_t>(c)])) *
                  es.eigenvectors().col(kept[static_cast<std::size_t>(c)]);
  }

  // The minor form is degree-2 homogeneous, so the ensemble average
  // sum_i p_i C(psi_i) is just the sum of minor concurrences of the
  // unnormalized decomposition vectors.
  const auto ensemble_average = [&](const Matrix& columns) {
    double sum = 0.0;
    for (Index c = 0; c < columns.cols(); ++c) {
      sum += minor_concurrence(columns.col(c), rho.dims());
    }
    return sum;
  };

  double best = ensemble_average(base);
  for (int t = 1; t < trials; ++t) {
    Rng rng(derive_seed(seed, 0x726f6f66ULL, static_cast<std::uint64_t>(t)));
    const Index k = rank + static_cast<Index>(t % (static_cast<int>(rank) + 1));
    const Matrix q = random_isometry(k, rank, rng);
    best = std::min(best, ensemble_average(base * q.transpose()));
  }
  return best;
}

}  // namespace qconc
