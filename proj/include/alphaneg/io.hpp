// Copyright 2026 The alphaneg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON formats for states and channels.
//
// State:   {"dims": [dA, dB], "matrix": [[[re, im], ...], ...]}
// Channel: {"kind": "kraus" | "superop", "dims_in": [...], "dims_out": [...],
//           "data": [matrix, ...] | matrix}
// Entries are [re, im] pairs, rows in composite index order a*dB + b. A
// single-entry dims list [d] means [d, 1].

#ifndef ALPHANEG_IO_HPP
#define ALPHANEG_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "alphaneg/bipartite_state.hpp"
#include "alphaneg/channels.hpp"
#include "alphaneg/errors.hpp"
#include "alphaneg/linalg.hpp"

namespace alphaneg {

using Json = nlohmann::json;

namespace detail {

[[noreturn]] inline void bad_input(const std::string& what) {
  throw Error(ErrorKind::kInvalidArgument, what);
}

inline double finite_number(const Json& j, const char* where) {
  if (!j.is_number()) bad_input(std::string(where) + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) bad_input(std::string(where) + ": non-finite number");
  return v;
}

}  // namespace detail

inline Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

inline ComplexMatrix matrix_from_json(const Json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) {
    detail::bad_input("matrix: expected " + std::to_string(rows) + " rows");
  }
  ComplexMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      detail::bad_input("matrix: row " + std::to_string(r) + " needs " + std::to_string(cols) +
                        " entries");
    }
    for (int c = 0; c < cols; ++c) {
      const Json& e = row[c];
      if (!e.is_array() || e.size() != 2) detail::bad_input("matrix: entries are [re, im] pairs");
      m(r, c) = Complex(detail::finite_number(e[0], "matrix"), detail::finite_number(e[1], "matrix"));
    }
  }
  return m;
}

inline BipartitionDims dims_from_json(const Json& j, const char* key) {
  if (!j.is_array() || j.empty() || j.size() > 2) {
    detail::bad_input(std::string(key) + ": expected [d] or [dA, dB]");
  }
  std::vector<int> d;
  for (const Json& e : j) {
    if (!e.is_number_integer() || e.get<long>() < 1 || e.get<long>() > 64) {
      detail::bad_input(std::string(key) + ": dimensions must be integers in [1, 64]");
    }
    d.push_back(e.get<int>());
  }
  return d.size() == 1 ? BipartitionDims(d[0], 1) : BipartitionDims(d[0], d[1]);
}

inline Json dims_to_json(const BipartitionDims& d) { return Json::array({d.dA, d.dB}); }

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) detail::bad_input("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    detail::bad_input("'" + path + "': " + e.what());
  }
}

/// Parses a state. With raw = true any Hermitian operator is admitted and
/// only the Hermiticity check applies.
inline BipartiteState state_from_json(const Json& j, bool raw = false) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("matrix")) {
    detail::bad_input("state: needs \"dims\" and \"matrix\"");
  }
  const BipartitionDims dims = dims_from_json(j["dims"], "dims");
  const ComplexMatrix m = matrix_from_json(j["matrix"], dims.total(), dims.total());
  if (!raw) return BipartiteState(dims, m);
  check_hermitian(m, kHermitianTol);
  return BipartiteState::unchecked(dims, hermitian_part(m));
}

inline Json state_to_json(const BipartiteState& s) {
  return Json{{"dims", dims_to_json(s.dims())}, {"matrix", matrix_to_json(s.matrix())}};
}

inline BipartiteState load_state(const std::string& path, bool raw = false) {
  return state_from_json(read_json_file(path), raw);
}

inline void save_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) detail::bad_input("cannot write '" + path + "'");
  out << j.dump(1) << '\n';
}

/// Kraus input must be trace preserving; superoperator input must be
/// completely positive and trace preserving.
inline SuperOperator channel_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("dims_in") ||
      !j.contains("dims_out") || !j.contains("data")) {
    detail::bad_input("channel: needs \"kind\", \"dims_in\", \"dims_out\", \"data\"");
  }
  const BipartitionDims in = dims_from_json(j["dims_in"], "dims_in");
  const BipartitionDims out = dims_from_json(j["dims_out"], "dims_out");
  const std::string kind = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
  if (kind == "kraus") {
    if (!j["data"].is_array() || j["data"].empty()) detail::bad_input("kraus: data is a list");
    std::vector<ComplexMatrix> ops;
    for (const Json& k : j["data"]) ops.push_back(matrix_from_json(k, out.total(), in.total()));
    return KrausChannel(std::move(ops), in, out).superop();
  }
  if (kind == "superop") {
    SuperOperator s(matrix_from_json(j["data"], out.total() * out.total(), in.total() * in.total()),
                    in, out);
    const CpptpReport r = cpptp_report(s);
    if (!r.completely_positive(kChannelTol) || !r.trace_preserving(kChannelTol)) {
      detail::bad_input("superop: map is not completely positive and trace preserving");
    }
    return s;
  }
  detail::bad_input("channel: kind must be \"kraus\" or \"superop\"");
}

inline Json channel_to_json(const SuperOperator& s) {
  return Json{{"kind", "superop"},
              {"dims_in", dims_to_json(s.in_dims())},
              {"dims_out", dims_to_json(s.out_dims())},
              {"data", matrix_to_json(s.matrix())}};
}

inline SuperOperator load_channel(const std::string& path) {
  return channel_from_json(read_json_file(path));
}

}  // namespace alphaneg

#endif  // ALPHANEG_IO_HPP
