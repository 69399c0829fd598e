//
// geninv - exact generalized inverses over Q(i) and GF(p)
//
// Copyright 2026 the geninv developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// File formats.  Matrices travel as
//   { "ring": "Qi" | "GF", "p": <prime, GF only>, "n": <dim>,
//     "entries": [ [ "<scalar>", ... ], ... ] }
// and monoids as
//   { "k": <size>, "identity": <id>, "mul": [[ids...]...],
//     "star": [ids...] (optional), "labels": [strings] (optional) }.
// Parsing is exact; malformed scalars are hard errors naming row/column.

#ifndef GENINV_IO_HPP_
#define GENINV_IO_HPP_

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "monoid.hpp"

namespace geninv {

using Json = nlohmann::json;

//! A matrix over either ground arithmetic, as read from a file.
using AnyMatrix = std::variant<QiMatrix, GfMatrix>;

namespace io {

template <typename D>
Json matrix_to_json(const SquareMatrix<D>& m) {
  Json j;
  if constexpr (std::is_same_v<D, QiField>) {
    j["ring"] = "Qi";
  } else {
    j["ring"] = "GF";
    j["p"]    = m.domain().modulus();
  }
  j["n"] = m.dim();
  Json rows = Json::array();
  for (int i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.dim(); ++k) {
      row.push_back(m.domain().str(m.at(i, k)));
    }
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

inline Json matrix_to_json(const AnyMatrix& m) {
  return std::visit([](const auto& v) { return matrix_to_json(v); }, m);
}

namespace detail {

template <typename D>
SquareMatrix<D> entries_from_json(const D& dom, const Json& j,
                                  const std::string& where) {
  require(j.contains("n") && j["n"].is_number_integer(),
          where + ": missing integer field 'n'");
  const int n = j["n"].get<int>();
  require(n >= 1, where + ": dimension must be positive");
  require(j.contains("entries") && j["entries"].is_array()
              && static_cast<int>(j["entries"].size()) == n,
          where + ": 'entries' must be an array of " + std::to_string(n)
              + " rows");
  std::vector<typename D::Scalar> e;
  e.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const Json& row = j["entries"][i];
    require(row.is_array() && static_cast<int>(row.size()) == n,
            where + ": row " + std::to_string(i + 1) + " must have "
                + std::to_string(n) + " entries");
    for (int k = 0; k < n; ++k) {
      require(row[k].is_string(),
              where + ": entry (" + std::to_string(i + 1) + ","
                  + std::to_string(k + 1) + ") must be a string");
      try {
        e.push_back(dom.parse(row[k].get<std::string>()));
      } catch (const Error& err) {
        throw Error(where + ": entry (" + std::to_string(i + 1) + ","
                    + std::to_string(k + 1) + "): " + err.what());
      }
    }
  }
  return SquareMatrix<D>(dom, n, std::move(e));
}

}  // namespace detail

inline AnyMatrix matrix_from_json(const Json& j,
                                  const std::string& where = "matrix") {
  require(j.is_object(), where + ": expected an object");
  require(j.contains("ring") && j["ring"].is_string(),
          where + ": missing string field 'ring'");
  const std::string ring = j["ring"].get<std::string>();
  if (ring == "Qi") {
    require(!j.contains("p"), where + ": 'p' is only valid for ring \"GF\"");
    return detail::entries_from_json(QiField{}, j, where);
  }
  if (ring == "GF") {
    require(j.contains("p") && j["p"].is_number_integer(),
            where + ": ring \"GF\" needs an integer field 'p'");
    PrimeField dom(j["p"].get<std::int64_t>());
    return detail::entries_from_json(dom, j, where);
  }
  throw Error(where + ": unknown ring '" + ring + "' (expected Qi or GF)");
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw Error("file '" + path + "' is not valid structured text: "
                + e.what());
  }
  return j;
}

inline AnyMatrix read_matrix_file(const std::string& path) {
  return matrix_from_json(read_json_file(path), "file '" + path + "'");
}

inline void write_text_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  require(out.good(), "cannot write file '" + path + "'");
  out << body;
}

inline Json monoid_to_json(const FiniteMonoid& m) {
  Json j;
  j["k"]        = m.size();
  j["identity"] = m.one();
  Json mul = Json::array();
  for (ElementId a = 0; a < m.size(); ++a) {
    Json row = Json::array();
    for (ElementId b = 0; b < m.size(); ++b) {
      row.push_back(m.mul(a, b));
    }
    mul.push_back(std::move(row));
  }
  j["mul"] = std::move(mul);
  if (m.has_star()) {
    j["star"] = m.star_table();
  }
  if (m.has_labels()) {
    j["labels"] = m.labels();
  }
  return j;
}

//! Loads and fully validates a monoid table (associativity over all k^3
//! triples, identity, involution laws).
inline FiniteMonoid monoid_from_json(const Json& j,
                                     const std::string& where = "monoid") {
  require(j.is_object(), where + ": expected an object");
  require(j.contains("k") && j["k"].is_number_integer(),
          where + ": missing integer field 'k'");
  require(j.contains("identity") && j["identity"].is_number_integer(),
          where + ": missing integer field 'identity'");
  require(j.contains("mul") && j["mul"].is_array(),
          where + ": missing array field 'mul'");
  const std::size_t k = j["k"].get<std::size_t>();
  require(j["mul"].size() == k, where + ": 'mul' must have k rows");
  std::vector<std::vector<ElementId>> mul;
  mul.reserve(k);
  for (const auto& row : j["mul"]) {
    require(row.is_array() && row.size() == k,
            where + ": every 'mul' row must have k entries");
    mul.push_back(row.get<std::vector<ElementId>>());
  }
  std::optional<std::vector<ElementId>> star;
  if (j.contains("star")) {
    require(j["star"].is_array() && j["star"].size() == k,
            where + ": 'star' must be an array of k ids");
    star = j["star"].get<std::vector<ElementId>>();
  }
  std::optional<std::vector<std::string>> labels;
  if (j.contains("labels")) {
    require(j["labels"].is_array() && j["labels"].size() == k,
            where + ": 'labels' must be an array of k strings");
    labels = j["labels"].get<std::vector<std::string>>();
  }
  return FiniteMonoid::validated(j["identity"].get<ElementId>(),
                                 std::move(mul), std::move(star),
                                 std::move(labels));
}

inline FiniteMonoid read_monoid_file(const std::string& path) {
  return monoid_from_json(read_json_file(path), "file '" + path + "'");
}

//! Machine format: pretty-printed with sorted keys and a trailing newline,
//! identical across runs, platforms and worker counts.
inline std::string machine_dump(const Json& j) {
  return j.dump(2) + "\n";
}

}  // namespace io
}  // namespace geninv

#endif  // GENINV_IO_HPP_
