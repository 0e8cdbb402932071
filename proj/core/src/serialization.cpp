// Copyright 2026 The bogofock Authors
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

#include "bogofock/serialization.hpp"

#include "json.hpp"

#include "bogofock/errors.hpp"

namespace bogofock {

using nlohmann::json;

namespace {

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j, const char* what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError(std::string(what) + ": complex entries must be [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json vector_to_json(const CVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v[i]));
  return out;
}

json matrix_to_json(const CMatrix& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

CVector vector_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = complex_from_json(j[i], what);
  return v;
}

CMatrix matrix_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(j[0].size());
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw ParseError(std::string(what) + ": rows must be arrays of equal length");
    }
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)], what);
  }
  return m;
}

const json& require(const json& obj, const char* key) {
  if (!obj.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

json parse_object(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!j.is_object()) throw ParseError("top-level JSON value must be an object");
  return j;
}

std::size_t parse_modes(const json& j) {
  if (!j.is_number_integer() || j.get<long long>() <= 0) {
    throw ParseError("\"n_modes\" must be a positive integer");
  }
  return j.get<std::size_t>();
}

std::string dump(const json& j) {
  // nlohmann writes doubles with max_digits10, which round-trips exactly.
  return j.dump(2) + "\n";
}

}  // namespace

std::string transform_to_json(const BogoliubovTransform& transform) {
  json j;
  j["n_modes"] = transform.n_modes();
  j["S"] = matrix_to_json(transform.s());
  j["R"] = matrix_to_json(transform.r());
  j["t"] = vector_to_json(transform.t());
  return dump(j);
}

BogoliubovTransform parse_transform(std::string_view text) {
  const json j = parse_object(text);
  const std::size_t n = parse_modes(require(j, "n_modes"));
  CMatrix s = matrix_from_json(require(j, "S"), "S");
  CMatrix r = matrix_from_json(require(j, "R"), "R");
  CVector t = j.contains("t") ? vector_from_json(j.at("t"), "t")
                              : CVector::Zero(static_cast<Eigen::Index>(n));
  if (s.rows() != static_cast<Eigen::Index>(n)) {
    throw ShapeError("S has " + std::to_string(s.rows()) + " rows but n_modes is " + std::to_string(n));
  }
  return {std::move(s), std::move(r), std::move(t)};
}

std::string ops_to_json(const OpList& list) {
  json ops = json::array();
  for (const auto& op : list.ops) {
    json entry;
    if (const auto* d = std::get_if<Displacement>(&op)) {
      entry["type"] = "displacement";
      entry["t"] = vector_to_json(d->t);
    } else if (const auto* r = std::get_if<Rotation>(&op)) {
      entry["type"] = "rotation";
      entry["U"] = matrix_to_json(r->u);
    } else {
      const auto& sq = std::get<Squeezing>(op);
      entry["type"] = "squeezing";
      entry["sigma"] = std::vector<double>(sq.sigma.data(), sq.sigma.data() + sq.sigma.size());
    }
    ops.push_back(std::move(entry));
  }
  json j;
  j["n_modes"] = list.n_modes;
  j["ops"] = std::move(ops);
  return dump(j);
}

OpList parse_ops(std::string_view text) {
  const json j = parse_object(text);
  const json& ops = require(j, "ops");
  if (!ops.is_array()) throw ParseError("\"ops\" must be an array");
  OpList out;
  if (j.contains("n_modes")) out.n_modes = parse_modes(j.at("n_modes"));
  for (const json& entry : ops) {
    if (!entry.is_object()) throw ParseError("each op must be an object");
    const json& type = require(entry, "type");
    if (!type.is_string()) throw ParseError("op \"type\" must be a string");
    const auto name = type.get<std::string>();
    if (name == "displacement") {
      out.ops.emplace_back(Displacement{vector_from_json(require(entry, "t"), "t")});
    } else if (name == "rotation") {
      out.ops.emplace_back(Rotation{matrix_from_json(require(entry, "U"), "U")});
    } else if (name == "squeezing") {
      const CVector s = vector_from_json(require(entry, "sigma"), "sigma");
      if (s.size() > 0 && s.imag().cwiseAbs().maxCoeff() != 0.0) throw ParseError("squeezing parameters must be real");
      out.ops.emplace_back(Squeezing{s.real()});
    } else {
      throw ParseError("unknown op type \"" + name + "\"");
    }
    const std::size_t modes = op_modes(out.ops.back());
    if (out.n_modes == 0) out.n_modes = modes;
    if (modes != out.n_modes) {
      throw ShapeError("op \"" + name + "\" acts on " + std::to_string(modes) +
                       " modes, expected " + std::to_string(out.n_modes));
    }
  }
  if (out.n_modes == 0) throw ParseError("empty op list needs \"n_modes\"");
  return out;
}

}  // namespace bogofock
