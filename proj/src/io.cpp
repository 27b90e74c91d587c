// Copyright 2026 The qdeph authors
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

#include "qdeph/io.hpp"

#include <charconv>
#include <fstream>

namespace qdeph::io {

namespace {

double number_from_json(const json& j, const char* what) {
  if (!j.is_number())
    throw IOError(std::string(what) + ": expected a number");
  return j.get<double>();
}

Eigen::Index index_from_json(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw IOError(std::string(what) + ": expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < 0) throw IOError(std::string(what) + ": expected a nonnegative integer");
  return static_cast<Eigen::Index>(v);
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

json complex_to_json(const Complex& z) {
  return json::array({z.real(), z.imag()});
}

Complex complex_from_json(const json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (!j.is_array() || j.size() != 2)
    throw IOError("complex entry: expected [re, im] or a real number");
  return Complex(number_from_json(j[0], "complex re"),
                 number_from_json(j[1], "complex im"));
}

json matrix_to_json(const CMat& m) {
  json data = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      data.push_back(complex_to_json(m(i, j)));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

CMat matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("data"))
    throw IOError("matrix: expected {rows, cols, data}");
  const Eigen::Index rows = index_from_json(j["rows"], "matrix rows");
  const Eigen::Index cols = index_from_json(j["cols"], "matrix cols");
  const json& data = j["data"];
  if (!data.is_array() ||
      static_cast<Eigen::Index>(data.size()) != rows * cols)
    throw IOError("matrix: data length does not equal rows*cols");
  CMat m(rows, cols);
  Eigen::Index pos = 0;
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = complex_from_json(data[static_cast<std::size_t>(pos++)]);
  if (!m.allFinite()) throw IOError("matrix: non-finite entries");
  return m;
}

json vector_to_json(const CVec& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out.push_back(complex_to_json(v(i)));
  return out;
}

CVec vector_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw IOError("vector: expected a nonempty array");
  CVec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

json channel_to_json(const QuantumChannel& chan) {
  json kraus = json::array();
  for (const auto& v : chan.kraus()) kraus.push_back(matrix_to_json(v));
  return json{{"dim_in", chan.dim_in()},
              {"dim_out", chan.dim_out()},
              {"kraus", kraus}};
}

QuantumChannel channel_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kraus") || !j["kraus"].is_array() ||
      j["kraus"].empty())
    throw IOError("channel: expected {dim_in, dim_out, kraus: [...]}");
  std::vector<CMat> kraus;
  for (const auto& item : j["kraus"]) kraus.push_back(matrix_from_json(item));
  QuantumChannel chan(std::move(kraus));
  if (j.contains("dim_in") &&
      index_from_json(j["dim_in"], "channel dim_in") != chan.dim_in())
    throw IOError("channel: dim_in does not match Kraus shapes");
  if (j.contains("dim_out") &&
      index_from_json(j["dim_out"], "channel dim_out") != chan.dim_out())
    throw IOError("channel: dim_out does not match Kraus shapes");
  return chan;
}

json distribution_to_json(const ProbabilityDistribution& pi) {
  return json{{"weights", pi.weights()}};
}

ProbabilityDistribution distribution_from_json(const json& j) {
  if (!j.is_object() || !j.contains("weights") || !j["weights"].is_array())
    throw IOError("distribution: expected {weights: [...]}");
  std::vector<double> w;
  for (const auto& item : j["weights"])
    w.push_back(number_from_json(item, "distribution weight"));
  return ProbabilityDistribution(std::move(w));
}

json measure_to_json(const CircleMeasure& mu) {
  json atoms = json::array();
  for (const auto& a : mu.atoms())
    atoms.push_back(json::array({a.weight, a.angle}));
  return json{{"atoms", atoms}};
}

CircleMeasure measure_from_json(const json& j) {
  if (!j.is_object() || !j.contains("atoms") || !j["atoms"].is_array())
    throw IOError("measure: expected {atoms: [[w, t], ...]}");
  std::vector<CircleMeasure::Atom> atoms;
  for (const auto& item : j["atoms"]) {
    if (!item.is_array() || item.size() != 2)
      throw IOError("measure: each atom must be [weight, angle]");
    atoms.push_back({number_from_json(item[0], "atom weight"),
                     number_from_json(item[1], "atom angle")});
  }
  return CircleMeasure(std::move(atoms));
}

json state_to_json(
    const DensityMatrix& rho,
    std::optional<std::pair<Eigen::Index, Eigen::Index>> bipartite) {
  json j = matrix_to_json(rho.matrix());
  if (bipartite) {
    j["dim_h"] = bipartite->first;
    j["dim_k"] = bipartite->second;
  }
  return j;
}

StateFile state_from_json(const json& j) {
  const CMat m = matrix_from_json(j);
  StateFile out{DensityMatrix::from_matrix(m), std::nullopt};
  if (j.contains("dim_h") || j.contains("dim_k")) {
    if (!j.contains("dim_h") || !j.contains("dim_k"))
      throw IOError("state: bipartite states need both dim_h and dim_k");
    const Eigen::Index dh = index_from_json(j["dim_h"], "state dim_h");
    const Eigen::Index dk = index_from_json(j["dim_k"], "state dim_k");
    if (dh * dk != out.state.dim())
      throw IOError("state: dim_h*dim_k does not match the matrix dimension");
    out.bipartite = {dh, dk};
  }
  return out;
}

json spec_to_json(const CorrelatedStateSpec& spec) {
  json vectors = json::array();
  for (const auto& h : spec.vectors()) vectors.push_back(vector_to_json(h));
  return json{{"coeff", matrix_to_json(spec.coeff())}, {"vectors", vectors}};
}

CorrelatedStateSpec spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeff") || !j.contains("vectors") ||
      !j["vectors"].is_array())
    throw IOError("spec: expected {coeff: matrix, vectors: [...]}");
  std::vector<CVec> vectors;
  for (const auto& item : j["vectors"])
    vectors.push_back(vector_from_json(item));
  return CorrelatedStateSpec(matrix_from_json(j["coeff"]),
                             std::move(vectors));
}

std::vector<Complex> lambda_from_json(const json& j) {
  const json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("lambda"))
      throw IOError("lambda: expected an array or {lambda: [...]}");
    arr = &j["lambda"];
  }
  if (!arr->is_array() || arr->empty())
    throw IOError("lambda: expected a nonempty array");
  std::vector<Complex> out;
  for (const auto& item : *arr) out.push_back(complex_from_json(item));
  return out;
}

json roof_to_json(const RoofEstimate& est) {
  json members = json::array();
  for (const auto& f : est.best.members) members.push_back(vector_to_json(f));
  return json{{"value", est.value},
              {"ensemble",
               json{{"weights", est.best.weights}, {"members", members}}},
              {"restarts", est.restarts_used},
              {"converged", est.converged}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw IOError("failed to parse " + path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw IOError("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw IOError("write failed for " + path);
}

void save_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IOError("cannot write " + path);
  out << text;
  if (!out) throw IOError("write failed for " + path);
}

}  // namespace qdeph::io
