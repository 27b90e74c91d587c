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

#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "qdeph/channels.hpp"
#include "qdeph/roof.hpp"
#include "qdeph/states.hpp"

// JSON serialization for every file format the library reads or writes.
// Numbers round-trip at full double precision (shortest representation).
// All readers throw IOError with a description on malformed input.

namespace qdeph::io {

using json = nlohmann::json;

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double x);

json complex_to_json(const Complex& z);
Complex complex_from_json(const json& j);

/// Matrix format: {"rows": r, "cols": c, "data": [[re, im], ...]} row-major.
json matrix_to_json(const CMat& m);
CMat matrix_from_json(const json& j);

json vector_to_json(const CVec& v);
CVec vector_from_json(const json& j);

/// {"dim_in": d, "dim_out": d, "kraus": [matrix, ...]}.
json channel_to_json(const QuantumChannel& chan);
QuantumChannel channel_from_json(const json& j);

/// {"weights": [w, ...]}.
json distribution_to_json(const ProbabilityDistribution& pi);
ProbabilityDistribution distribution_from_json(const json& j);

/// {"atoms": [[weight, angle], ...]}.
json measure_to_json(const CircleMeasure& mu);
CircleMeasure measure_from_json(const json& j);

/// Matrix format plus optional {"dim_h": h, "dim_k": k} when bipartite.
struct StateFile {
  DensityMatrix state;
  std::optional<std::pair<Eigen::Index, Eigen::Index>> bipartite;
};
json state_to_json(const DensityMatrix& rho,
                   std::optional<std::pair<Eigen::Index, Eigen::Index>>
                       bipartite = std::nullopt);
StateFile state_from_json(const json& j);

/// {"coeff": matrix, "vectors": [[[re, im], ...], ...]}.
json spec_to_json(const CorrelatedStateSpec& spec);
CorrelatedStateSpec spec_from_json(const json& j);

/// A kernel sequence for classification: either a bare array or an object
/// {"lambda": [...]}; entries are [re, im] pairs or plain reals.
std::vector<Complex> lambda_from_json(const json& j);

/// {"value": v, "ensemble": {"weights": [...], "members": [vector, ...]},
///  "restarts": r, "converged": b}.
json roof_to_json(const RoofEstimate& est);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);
void save_text_file(const std::string& path, const std::string& text);

}  // namespace qdeph::io
