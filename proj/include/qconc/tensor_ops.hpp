#pragma once

// Operations on dense multipartite matrices: partial trace, partial
// transpose, realignment against the (one subsystem | rest) bipartition,
// trace norm, and projection onto index-subset sub-states.
//
// All functions are pure; inputs are never modified.

#include "qconc/selectors.hpp"
#include "qconc/system_dims.hpp"

#include <Eigen/SVD>

#include <utility>

namespace qconc {

namespace detail {
inline void check_multipartite(const Matrix& rho, const SystemDims& dims, const char* op) {
  require(rho.rows() == rho.cols(), std::string(op) + ": matrix must be square");
  require(rho.rows() == dims.total(), std::string(op) + ": dims " + dims.to_string() +
                                          " do not match a " + std::to_string(rho.rows()) + "-row matrix");
  require(all_finite(rho), std::string(op) + ": non-finite entries");
}

inline int checked_slot(int slot, const SystemDims& dims, const char* op) {
  require(slot >= 0 && slot < dims.parties(), std::string(op) + ": subsystem index out of range");
  return slot;
}
}  // namespace detail

// Reduced matrix of subsystem `keep` (zero-based); trace is preserved.
inline Matrix partial_trace(const Matrix& rho, const SystemDims& dims, int keep) {
  detail::check_multipartite(rho, dims, "partial_trace");
  detail::checked_slot(keep, dims, "partial_trace");
  const Index d = dims.dim(keep);
  const Index stride = dims.strides()[static_cast<std::size_t>(keep)];
  const auto emb = complement_embedding(dims, keep);
  Matrix out = Matrix::Zero(d, d);
  for (Index a = 0; a < d; ++a) {
    for (Index b = 0; b < d; ++b) {
      Complex sum = 0;
      for (Index e : emb) sum += rho(a * stride + e, b * stride + e);
      out(a, b) = sum;
    }
  }
  return out;
}

// Transposition of the row/column indices of one subsystem.
inline Matrix partial_transpose(const Matrix& rho, const SystemDims& dims, int slot) {
  detail::check_multipartite(rho, dims, "partial_transpose");
  detail::checked_slot(slot, dims, "partial_transpose");
  const Index d = dims.dim(slot);
  const Index stride = dims.strides()[static_cast<std::size_t>(slot)];
  const Index n = rho.rows();
  Matrix out(n, n);
  for (Index r = 0; r < n; ++r) {
    const Index rj = (r / stride) % d;
    for (Index c = 0; c < n; ++c) {
      const Index cj = (c / stride) % d;
      out(r + (cj - rj) * stride, c + (rj - cj) * stride) = rho(r, c);
    }
  }
  return out;
}

// Realignment against the bipartition (subsystem `slot` | all others in
// original order). With a over the chosen subsystem (size A) and b over its
// complement (size B), the result M is A^2 x B^2 with
// M_{(a,a'),(b,b')} = rho_{(a,b),(a',b')}, row flat index a*A + a', column
// flat index b*B + b'.
inline Matrix realign(const Matrix& rho, const SystemDims& dims, int slot) {
  detail::check_multipartite(rho, dims, "realign");
  detail::checked_slot(slot, dims, "realign");
  const Index A = dims.dim(slot);
  const Index B = dims.total() / A;
  const Index stride = dims.strides()[static_cast<std::size_t>(slot)];
  const auto emb = complement_embedding(dims, slot);
  Matrix out(A * A, B * B);
  for (Index a = 0; a < A; ++a) {
    for (Index a2 = 0; a2 < A; ++a2) {
      for (Index b = 0; b < B; ++b) {
        for (Index b2 = 0; b2 < B; ++b2) {
          out(a * A + a2, b * B + b2) = rho(a * stride + emb[static_cast<std::size_t>(b)],
                                            a2 * stride + emb[static_cast<std::size_t>(b2)]);
        }
      }
    }
  }
  return out;
}

// Inverse of realign(); restores the original matrix.
inline Matrix realign_inverse(const Matrix& m, const SystemDims& dims, int slot) {
  detail::checked_slot(slot, dims, "realign_inverse");
  const Index A = dims.dim(slot);
  const Index B = dims.total() / A;
  require(m.rows() == A * A && m.cols() == B * B, "realign_inverse: shape mismatch");
  require(all_finite(m), "realign_inverse: non-finite entries");
  const Index stride = dims.strides()[static_cast<std::size_t>(slot)];
  const auto emb = complement_embedding(dims, slot);
  Matrix out(dims.total(), dims.total());
  for (Index a = 0; a < A; ++a) {
    for (Index a2 = 0; a2 < A; ++a2) {
      for (Index b = 0; b < B; ++b) {
        for (Index b2 = 0; b2 < B; ++b2) {
          out(a * stride + emb[static_cast<std::size_t>(b)],
              a2 * stride + emb[static_cast<std::size_t>(b2)]) = m(a * A + a2, b * B + b2);
        }
      }
    }
  }
  return out;
}

// Sum of singular values, Tr sqrt(M M^dag). Works for any rectangular matrix.
inline double trace_norm(const Matrix& m) {
  require(all_finite(m), "trace_norm: non-finite entries");
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  if (svd.info() != Eigen::Success) throw numerical_error("trace_norm: SVD did not converge");
  return svd.singularValues().sum();
}

// Projection onto the selector's index subsets, re-indexed to dims
// (m,...,m) with each subset's sorted order preserved. The output is
// unnormalized; its trace is the sum of the selected diagonal entries.
inline std::pair<Matrix, SystemDims> project_substate(const Matrix& rho, const SystemDims& dims,
                                                      const SubstateSelector& sel) {
  detail::check_multipartite(rho, dims, "project_substate");
  sel.validate(dims);
  const int m = sel.subset_size();
  const SystemDims sub_dims = SystemDims::uniform(dims.parties(), m);
  const Index sub_total = sub_dims.total();
  const auto strides = dims.strides();

  // Flat source index for every flat sub-state index.
  std::vector<Index> src(static_cast<std::size_t>(sub_total));
  for (Index f = 0; f < sub_total; ++f) {
    const auto idx = unflatten(f, sub_dims);
    Index full = 0;
    for (int k = 0; k < dims.parties(); ++k) {
      full += static_cast<Index>(sel.subsets[static_cast<std::size_t>(k)][static_cast<std::size_t>(
                  idx[static_cast<std::size_t>(k)])]) *
              strides[static_cast<std::size_t>(k)];
    }
    src[static_cast<std::size_t>(f)] = full;
  }

  Matrix out(sub_total, sub_total);
  for (Index r = 0; r < sub_total; ++r) {
    for (Index c = 0; c < sub_total; ++c) {
      out(r, c) = rho(src[static_cast<std::size_t>(r)], src[static_cast<std::size_t>(c)]);
    }
  }
  return {std::move(out), sub_dims};
}

}  // namespace qconc
