#pragma once

// Ordered subsystem dimensions and the composite-index convention used
// throughout: row-major, subsystem 0 slowest, so the flat index of
// (i_0, ..., i_{n-1}) is ((i_0*d_1 + i_1)*d_2 + ...).

#include "qconc/common.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace qconc {

class SystemDims {
 public:
  explicit SystemDims(std::vector<int> dims) : dims_(std::move(dims)) {
    require(dims_.size() >= 2, "SystemDims: need at least two subsystems");
    for (int d : dims_) require(d >= 1, "SystemDims: dimensions must be positive");
  }

  static SystemDims uniform(int parties, int dim) {
    require(parties >= 2, "SystemDims::uniform: need at least two subsystems");
    require(dim >= 1, "SystemDims::uniform: dimension must be positive");
    return SystemDims(std::vector<int>(static_cast<std::size_t>(parties), dim));
  }

  int parties() const { return static_cast<int>(dims_.size()); }

  int dim(int slot) const {
    require(slot >= 0 && slot < parties(), "SystemDims: subsystem index out of range");
    return dims_[static_cast<std::size_t>(slot)];
  }

  const std::vector<int>& dims() const { return dims_; }

  Index total() const {
    Index t = 1;
    for (int d : dims_) t *= d;
    return t;
  }

  bool all_equal() const {
    return std::all_of(dims_.begin(), dims_.end(), [&](int d) { return d == dims_[0]; });
  }

  int min_dim() const { return *std::min_element(dims_.begin(), dims_.end()); }

  // strides()[k] is the flat-index step of slot k; strides()[n-1] == 1.
  std::vector<Index> strides() const {
    std::vector<Index> s(dims_.size());
    Index acc = 1;
    for (int k = parties() - 1; k >= 0; --k) {
      s[static_cast<std::size_t>(k)] = acc;
      acc *= dims_[static_cast<std::size_t>(k)];
    }
    return s;
  }

  bool operator==(const SystemDims& other) const { return dims_ == other.dims_; }
  bool operator!=(const SystemDims& other) const { return !(*this == other); }

  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < dims_.size(); ++k) {
      if (k) s += 'x';
      s += std::to_string(dims_[k]);
    }
    return s;
  }

 private:
  std::vector<int> dims_;
};

inline Index flat_index(const std::vector<int>& idx, const SystemDims& dims) {
  require(static_cast<int>(idx.size()) == dims.parties(), "flat_index: wrong component count");
  Index flat = 0;
  for (int k = 0; k < dims.parties(); ++k) {
    require(idx[static_cast<std::size_t>(k)] >= 0 && idx[static_cast<std::size_t>(k)] < dims.dim(k),
            "flat_index: component out of range");
    flat = flat * dims.dim(k) + idx[static_cast<std::size_t>(k)];
  }
  return flat;
}

inline std::vector<int> unflatten(Index flat, const SystemDims& dims) {
  std::vector<int> idx(static_cast<std::size_t>(dims.parties()));
  for (int k = dims.parties() - 1; k >= 0; --k) {
    idx[static_cast<std::size_t>(k)] = static_cast<int>(flat % dims.dim(k));
    flat /= dims.dim(k);
  }
  return idx;
}

// Flat-index contributions of every joint configuration of the subsystems
// other than `slot`, enumerated in row-major order of the remaining slots.
// Adding a * strides()[slot] embeds (a at slot, b over the rest) into the
// full flat index.
inline std::vector<Index> complement_embedding(const SystemDims& dims, int slot) {
  require(slot >= 0 && slot < dims.parties(), "complement_embedding: slot out of range");
  const auto strides = dims.strides();
  std::vector<Index> emb;
  emb.reserve(static_cast<std::size_t>(dims.total() / dims.dim(slot)));
  std::vector<int> idx(static_cast<std::size_t>(dims.parties()), 0);
  while (true) {
    Index e = 0;
    for (int k = 0; k < dims.parties(); ++k) {
      if (k != slot) e += idx[static_cast<std::size_t>(k)] * strides[static_cast<std::size_t>(k)];
    }
    emb.push_back(e);
    int k = dims.parties() - 1;
    for (; k >= 0; --k) {
      if (k == slot) continue;
      if (++idx[static_cast<std::size_t>(k)] < dims.dim(k)) break;
      idx[static_cast<std::size_t>(k)] = 0;
    }
    if (k < 0) break;
  }
  return emb;
}

}  // namespace qconc
