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

#include <cstdint>

#include "qdeph/entropy.hpp"

namespace qdeph {

/// Pure-state decomposition of a target state: sigma = sum_j p_j |f_j><f_j|.
struct Ensemble {
  std::vector<double> weights;  // nonnegative, sum 1
  std::vector<CVec> members;    // unit vectors
};

/// sum_j p_j |f_j><f_j|; must reproduce the decomposed state within 1e-8.
CMat ensemble_average(const Ensemble& ens);

/// sum_j p_j S(omega(|f_j><f_j|)).
double ensemble_objective(const Ensemble& ens, const QuantumChannel& omega);

/// All m-member pure decompositions of sigma, parameterized by an m x r
/// matrix with orthonormal columns (r = rank): member j is
/// sum_i conj(mix(j,i)) sqrt(mu_i) u_i from the spectral form of sigma,
/// with weight its squared norm. Zero-weight members are dropped.
/// Throws IsometryError when the columns are not orthonormal within 1e-8.
Ensemble hjw_ensemble(const DensityMatrix& sigma, const CMat& mix);

/// Result of the convex-closure search. `value` is an upper bound on the
/// infimum and never exceeds the eigen-ensemble objective.
struct RoofEstimate {
  double value = 0.0;
  Ensemble best;
  int restarts_used = 0;
  bool converged = false;
};

/// Minimizes the ensemble objective over the isometry parameterization by
/// derivative-free pairwise-rotation sweeps from `restarts` random starting
/// isometries (plus the eigen-ensemble as baseline candidate).
/// members = 0 selects the default rank(sigma)^2. Deterministic in `seed`;
/// restart k draws its generator from mix_seed(seed, k).
RoofEstimate roof_upper_bound(const DensityMatrix& sigma,
                              const QuantumChannel& omega, int members,
                              int restarts, std::uint64_t seed);

/// Joint record for the correlated-state entropy-gain bound: the proof
/// ensemble value, the roof estimate on the K-marginal and the two
/// certified comparisons. gain >= roof.value alone is informational only,
/// since the roof estimate bounds the convex closure from above.
struct Corollary1Report {
  double gain = 0.0;            // S((Id (x) omega)(rho)) - S(rho)
  double ensemble_bound = 0.0;  // sum_n pi_n S(omega(|h_n><h_n|))
  RoofEstimate roof;            // upper bound on the convex closure of Tr_H rho
  GainCertificate gain_vs_ensemble;  // gain >= ensemble_bound
  GainCertificate roof_vs_ensemble;  // roof.value <= ensemble_bound
  double conjecture_margin = 0.0;    // gain - roof.value
};

Corollary1Report check_corollary1(const CorrelatedStateSpec& spec,
                                  const QuantumChannel& omega, int members,
                                  int restarts, std::uint64_t seed,
                                  double gain_tol = tol::kInequality,
                                  double roof_tol = 1e-6);

enum class ConjectureVerdict { kSupported, kInconclusive };

/// Probe of the conjectured bound gain >= S_Omega(Tr_H rho) on an arbitrary
/// bipartite state. Supported means gain >= roof.value - tolerance, which
/// implies the conjectured inequality since the roof estimate is an upper
/// bound. The probe never claims a counterexample.
struct ConjectureProbe {
  double gain = 0.0;
  RoofEstimate roof;
  ConjectureVerdict verdict = ConjectureVerdict::kInconclusive;
};

ConjectureProbe probe_conjecture(const DensityMatrix& rho, Eigen::Index dim_h,
                                 Eigen::Index dim_k,
                                 const QuantumChannel& omega, int members,
                                 int restarts, std::uint64_t seed,
                                 double tolerance = tol::kInequality);

}  // namespace qdeph
