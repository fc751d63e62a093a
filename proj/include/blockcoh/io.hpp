// Copyright 2026 The blockcoh Authors.
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

#pragma once

#include "blockcoh/classify.hpp"
#include "blockcoh/counting.hpp"
#include "blockcoh/kraus.hpp"
#include "blockcoh/measures.hpp"
#include "blockcoh/naimark.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace blockcoh::io {

using Json = nlohmann::ordered_json;

/// Parse or schema failure in an input document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Matrices are arrays of rows; each entry is [re, im].

inline Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline ComplexMatrix matrix_from_json(const Json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw FormatError(what + ": matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array()) throw FormatError(what + ": row 0 is not an array");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw FormatError(what + ": row " + std::to_string(r) + " has inconsistent length");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Json& e = row[static_cast<std::size_t>(c)];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw FormatError(what + ": entry (" + std::to_string(r) + "," + std::to_string(c) +
                          ") must be [re, im]");
      m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

inline Json partition_to_json(const BlockPartition& p) {
  Json a = Json::array();
  for (std::size_t d : p.dims()) a.push_back(d);
  return a;
}

inline BlockPartition partition_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("partition must be an array of positive integers");
  std::vector<std::size_t> dims;
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<long long>() <= 0)
      throw FormatError("partition must be an array of positive integers");
    dims.push_back(e.get<std::size_t>());
  }
  if (dims.empty()) throw FormatError("partition must not be empty");
  return BlockPartition(std::move(dims));
}

inline std::size_t read_dim(const Json& doc) {
  if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() <= 0)
    throw FormatError("document must be an object with a positive integer \"dim\"");
  return doc["dim"].get<std::size_t>();
}

// State file: {"dim": d, "matrix": [...]}

inline Json state_to_json(const ComplexMatrix& rho) {
  return Json{{"dim", rho.rows()}, {"matrix", matrix_to_json(rho)}};
}

inline DensityMatrix state_from_json(const Json& doc) {
  const std::size_t d = read_dim(doc);
  if (!doc.contains("matrix")) throw FormatError("state document lacks \"matrix\"");
  ComplexMatrix m = matrix_from_json(doc["matrix"], "state matrix");
  if (m.rows() != static_cast<Eigen::Index>(d) || m.cols() != static_cast<Eigen::Index>(d))
    throw FormatError("state matrix is not dim x dim");
  return DensityMatrix(std::move(m));
}

// Kraus-set file: {"dim": d, "partition": [...], "kraus": [matrix, ...]}

inline Json kraus_to_json(const KrausSet& ks) {
  Json ops = Json::array();
  for (const auto& k : ks.operators()) ops.push_back(matrix_to_json(k));
  return Json{{"dim", ks.dim()}, {"partition", partition_to_json(ks.partition())}, {"kraus", std::move(ops)}};
}

inline KrausSet kraus_from_json(const Json& doc) {
  const std::size_t d = read_dim(doc);
  if (!doc.contains("partition")) throw FormatError("Kraus document lacks \"partition\"");
  BlockPartition p = partition_from_json(doc["partition"]);
  if (p.total() != d)
    throw FormatError("partition sums to " + std::to_string(p.total()) + " but dim is " + std::to_string(d));
  if (!doc.contains("kraus") || !doc["kraus"].is_array() || doc["kraus"].empty())
    throw FormatError("Kraus document needs a non-empty \"kraus\" array");
  std::vector<ComplexMatrix> ops;
  for (std::size_t n = 0; n < doc["kraus"].size(); ++n) {
    ComplexMatrix k = matrix_from_json(doc["kraus"][n], "Kraus operator " + std::to_string(n));
    if (k.rows() != static_cast<Eigen::Index>(d) || k.cols() != static_cast<Eigen::Index>(d))
      throw FormatError("Kraus operator " + std::to_string(n) + " is " + std::to_string(k.rows()) + "x" +
                        std::to_string(k.cols()) + ", expected " + std::to_string(d) + "x" + std::to_string(d));
    ops.push_back(std::move(k));
  }
  return KrausSet(std::move(p), std::move(ops));
}

inline Json classifier_to_json(const ClassifierReport& r) {
  return Json{{"cptp", r.cptp},
              {"mbio", r.mbio},
              {"bio_structural", r.bio_structural},
              {"bio_semantic", r.bio_semantic},
              {"sbio_structural", r.sbio_structural},
              {"sbio_semantic", r.sbio_semantic},
              {"tolerance", r.tolerance}};
}

inline ClassifierReport classifier_from_json(const Json& j) {
  ClassifierReport r;
  r.cptp = j.at("cptp").get<bool>();
  r.mbio = j.at("mbio").get<bool>();
  r.bio_structural = j.at("bio_structural").get<bool>();
  r.bio_semantic = j.at("bio_semantic").get<bool>();
  r.sbio_structural = j.at("sbio_structural").get<bool>();
  r.sbio_semantic = j.at("sbio_semantic").get<bool>();
  r.tolerance = j.at("tolerance").get<double>();
  return r;
}

// POVM file: {"dim": d, "effects": [matrix, ...]}

inline Json povm_to_json(const Povm& povm) {
  Json effects = Json::array();
  for (const auto& e : povm.effects()) effects.push_back(matrix_to_json(e));
  return Json{{"dim", povm.dim()}, {"effects", std::move(effects)}};
}

inline Povm povm_from_json(const Json& doc) {
  const std::size_t d = read_dim(doc);
  if (!doc.contains("effects") || !doc["effects"].is_array() || doc["effects"].empty())
    throw FormatError("POVM document needs a non-empty \"effects\" array");
  std::vector<ComplexMatrix> effects;
  for (std::size_t i = 0; i < doc["effects"].size(); ++i) {
    ComplexMatrix e = matrix_from_json(doc["effects"][i], "effect " + std::to_string(i));
    if (e.rows() != static_cast<Eigen::Index>(d) || e.cols() != static_cast<Eigen::Index>(d))
      throw FormatError("effect " + std::to_string(i) + " is not dim x dim");
    effects.push_back(std::move(e));
  }
  return Povm(static_cast<Eigen::Index>(d), std::move(effects));
}

inline Json dilation_to_json(const NaimarkExtension& ext, const InducedPartition& induced) {
  return Json{{"dim", ext.system_dim},
              {"outcomes", ext.outcomes},
              {"V", matrix_to_json(ext.global_unitary)},
              {"ancilla_index", ext.ancilla_index},
              {"partition", partition_to_json(induced.partition)},
              {"permutation", induced.permutation}};
}

inline Json bound_to_json(const BoundReport& b) {
  Json levels = Json::array();
  for (const auto& c : b.per_level) levels.push_back(c.str());
  return Json{{"partition", partition_to_json(b.partition)},
              {"class", to_string(b.bound_class)},
              {"per_level", std::move(levels)},
              {"total", b.total.str()}};
}

inline Json measure_to_json(const MeasureReport& r) {
  return Json{{"measure", r.measure_name}, {"partition", partition_to_json(r.partition)}, {"value", r.value}};
}

inline Json probe_to_json(const ProbeReport& r) {
  return Json{{"probe", r.probe},
              {"trials", r.trials},
              {"worst_violation", r.worst_violation},
              {"counterexample", r.counterexample ? state_to_json(*r.counterexample) : Json(nullptr)}};
}

inline Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

/// Writes to a sibling temporary file and renames it over the target.
inline void write_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace blockcoh::io
