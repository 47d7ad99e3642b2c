#pragma once

// State files and machine-readable reports. A state file is one JSON
// document:
//
//   {
//     "kind": "density" | "pure",          // optional, inferred from shape
//     "dims": [2, 2, 2],
//     "entries": [ [ [re, im], ... ], ... ]  // rows; a pure state is one row
//   }

#include "qconc/bounds.hpp"
#include "qconc/states.hpp"

#include <json.hpp>

#include <fstream>
#include <string>

namespace qconc {

enum class StateKind { density, pure };

struct StateFile {
  StateKind kind = StateKind::density;
  SystemDims dims = SystemDims::uniform(2, 2);
  Matrix entries;  // pure states are a single row
};

inline StateFile parse_state_json(const nlohmann::json& doc) {
  require(doc.is_object(), "state file: top-level JSON object expected");
  require(doc.contains("dims") && doc["dims"].is_array(), "state file: missing dims array");
  std::vector<int> dims_list;
  for (const auto& d : doc["dims"]) {
    require(d.is_number_integer() && d.get<int>() >= 1, "state file: dims must be positive integers");
    dims_list.push_back(d.get<int>());
  }
  StateFile out{StateKind::density, SystemDims(std::move(dims_list)), Matrix()};

  require(doc.contains("entries") && doc["entries"].is_array() && !doc["entries"].empty(),
          "state file: missing entries");
  const auto& rows = doc["entries"];
  const Index nrows = static_cast<Index>(rows.size());
  const Index ncols = static_cast<Index>(rows.front().is_array() ? rows.front().size() : 0);
  require(ncols > 0, "state file: entries must be rows of [re, im] pairs");
  out.entries.resize(nrows, ncols);
  for (Index r = 0; r < nrows; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    require(row.is_array() && static_cast<Index>(row.size()) == ncols,
            "state file: ragged entries");
    for (Index c = 0; c < ncols; ++c) {
      const auto& e = row[static_cast<std::size_t>(c)];
      require(e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number(),
              "state file: each entry must be an [re, im] pair");
      out.entries(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }

  if (doc.contains("kind")) {
    const std::string kind = doc["kind"].get<std::string>();
    if (kind == "density") {
      out.kind = StateKind::density;
    } else if (kind == "pure") {
      out.kind = StateKind::pure;
    } else {
      throw invalid_input("state file: kind must be \"density\" or \"pure\"");
    }
  } else {
    out.kind = (nrows == 1 && ncols == out.dims.total()) ? StateKind::pure : StateKind::density;
  }

  if (out.kind == StateKind::pure) {
    require(nrows == 1 && ncols == out.dims.total(),
            "state file: a pure state needs exactly one row of product(dims) entries");
  } else {
    require(nrows == out.dims.total() && ncols == out.dims.total(),
            "state file: a density matrix must be square with product(dims) rows");
  }
  return out;
}

inline StateFile read_state_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open state file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw invalid_input("state file " + path + ": " + e.what());
  }
  return parse_state_json(doc);
}

inline PureState to_pure(const StateFile& f) {
  require(f.kind == StateKind::pure, "state file does not hold a pure state");
  Vector amps = f.entries.row(0).transpose();
  return PureState(std::move(amps), f.dims);
}

// Pure-kind files are accepted as the corresponding projector.
inline DensityMatrix to_density(const StateFile& f) {
  if (f.kind == StateKind::pure) return DensityMatrix::from_pure(to_pure(f));
  return DensityMatrix(f.entries, f.dims);
}

namespace detail {
inline nlohmann::json entries_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Index c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}
}  // namespace detail

inline nlohmann::json state_to_json(const DensityMatrix& rho) {
  return {{"kind", "density"},
          {"dims", rho.dims().dims()},
          {"entries", detail::entries_to_json(rho.matrix())}};
}

inline nlohmann::json state_to_json(const PureState& psi) {
  return {{"kind", "pure"},
          {"dims", psi.dims().dims()},
          {"entries", detail::entries_to_json(psi.amplitudes().transpose())}};
}

template <typename State>
inline void write_state_file(const std::string& path, const State& state) {
  std::ofstream out(path);
  require(out.good(), "cannot write state file: " + path);
  out << state_to_json(state).dump(1) << '\n';
  require(out.good(), "write failed: " + path);
}

inline nlohmann::json coefficient_to_json(const Coefficient& c) {
  return {{"numerator", c.numerator},
          {"denominator", c.denominator},
          {"N", c.N},
          {"m", c.m},
          {"parties", c.parties}};
}

inline nlohmann::json report_to_json(const BoundReport& report) {
  nlohmann::json doc{{"method", report.method},
                     {"value", report.value},
                     {"value_squared", report.value_squared},
                     {"pt_sum", report.pt_sum},
                     {"realign_sum", report.realign_sum}};
  if (report.coefficient) doc["coefficient"] = coefficient_to_json(*report.coefficient);
  nlohmann::json subs = nlohmann::json::array();
  for (const auto& s : report.per_substate) {
    subs.push_back({{"selector", s.selector.subsets},
                    {"trace", s.trace},
                    {"pt_deficit", s.pt_deficit},
                    {"realign_deficit", s.realign_deficit},
                    {"bound_squared", s.bound_squared}});
  }
  doc["per_substate"] = std::move(subs);
  if (!report.components.empty()) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& c : report.components) {
      parts.push_back({{"m", c.m},
                       {"weight", c.weight},
                       {"value_squared", c.value_squared},
                       {"coefficient", coefficient_to_json(c.coefficient)}});
    }
    doc["components"] = std::move(parts);
  }
  return doc;
}

}  // namespace qconc
