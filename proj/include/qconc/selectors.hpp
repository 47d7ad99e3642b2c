#pragma once

// Selection of one m-element index subset per subsystem, identifying a
// projected sub-state, plus enumeration of all such selections.

#include "qconc/system_dims.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qconc {

struct SubstateSelector {
  // One strictly increasing subset per subsystem, all of the same size.
  std::vector<std::vector<int>> subsets;

  int subset_size() const { return subsets.empty() ? 0 : static_cast<int>(subsets.front().size()); }

  void validate(const SystemDims& dims) const {
    require(static_cast<int>(subsets.size()) == dims.parties(),
            "SubstateSelector: one subset per subsystem required");
    const int m = subset_size();
    require(m >= 2 && m <= dims.min_dim(), "SubstateSelector: subset size must be in [2, min dim]");
    for (int k = 0; k < dims.parties(); ++k) {
      const auto& s = subsets[static_cast<std::size_t>(k)];
      require(static_cast<int>(s.size()) == m, "SubstateSelector: subsets must share one size");
      for (std::size_t i = 0; i < s.size(); ++i) {
        require(s[i] >= 0 && s[i] < dims.dim(k), "SubstateSelector: index out of range");
        if (i) require(s[i] > s[i - 1], "SubstateSelector: subsets must be strictly increasing");
      }
    }
  }

  bool is_full(const SystemDims& dims) const {
    for (int k = 0; k < dims.parties(); ++k) {
      if (static_cast<int>(subsets[static_cast<std::size_t>(k)].size()) != dims.dim(k)) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < subsets.size(); ++k) {
      if (k) out += 'x';
      out += '{';
      for (std::size_t i = 0; i < subsets[k].size(); ++i) {
        if (i) out += ',';
        out += std::to_string(subsets[k][i]);
      }
      out += '}';
    }
    return out;
  }

  bool operator==(const SubstateSelector& other) const { return subsets == other.subsets; }
};

inline SubstateSelector full_selector(const SystemDims& dims) {
  SubstateSelector sel;
  sel.subsets.reserve(static_cast<std::size_t>(dims.parties()));
  for (int k = 0; k < dims.parties(); ++k) {
    std::vector<int> s(static_cast<std::size_t>(dims.dim(k)));
    for (int i = 0; i < dims.dim(k); ++i) s[static_cast<std::size_t>(i)] = i;
    sel.subsets.push_back(std::move(s));
  }
  return sel;
}

// All m-element subsets of {0,...,n-1} in lexicographic order.
inline std::vector<std::vector<int>> combinations(int n, int m) {
  require(m >= 0 && m <= n, "combinations: need 0 <= m <= n");
  std::vector<std::vector<int>> out;
  std::vector<int> c(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) c[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(c);
    int i = m - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - m + i) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m; ++j) {
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

// Cartesian product of per-subsystem subset choices, slot 0 slowest, each
// slot's subsets in lexicographic order. The order is deterministic and is
// the reduction order of every sequential sum over sub-states.
inline std::vector<SubstateSelector> enumerate_selectors(const SystemDims& dims, int m) {
  require(m >= 2 && m <= dims.min_dim(), "enumerate_selectors: need 2 <= m <= min dim");
  std::vector<std::vector<std::vector<int>>> per_slot;
  per_slot.reserve(static_cast<std::size_t>(dims.parties()));
  for (int k = 0; k < dims.parties(); ++k) per_slot.push_back(combinations(dims.dim(k), m));

  std::vector<SubstateSelector> out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(dims.parties()), 0);
  while (true) {
    SubstateSelector sel;
    sel.subsets.reserve(pick.size());
    for (int k = 0; k < dims.parties(); ++k) {
      sel.subsets.push_back(per_slot[static_cast<std::size_t>(k)][pick[static_cast<std::size_t>(k)]]);
    }
    out.push_back(std::move(sel));
    int k = dims.parties() - 1;
    for (; k >= 0; --k) {
      if (++pick[static_cast<std::size_t>(k)] < per_slot[static_cast<std::size_t>(k)].size()) break;
      pick[static_cast<std::size_t>(k)] = 0;
    }
    if (k < 0) break;
  }
  return out;
}

inline std::uint64_t binomial(int n, int k) {
  require(n >= 0 && k >= 0 && k <= n, "binomial: need 0 <= k <= n");
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    require(r <= UINT64_MAX / num, "binomial: overflow");
    r = r * num / static_cast<std::uint64_t>(i);
  }
  return r;
}

}  // namespace qconc
