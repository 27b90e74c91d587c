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
#include <string>
#include <vector>

#include "qdeph/entropy.hpp"
#include "qdeph/roof.hpp"

namespace qdeph::harness {

enum class TheoremId {
  kEq3,         // entropy gain vs -Tr(rho log chan(I)), unital regime
  kProp1,       // projection bound on correlated states
  kThm1,        // correlated-state entropy gain bound
  kCor1,        // gain vs proof ensemble and roof estimate
  kCor2,        // dephasing (x) arbitrary channel bound
  kThm4,        // phase damping: kernel form vs shift-unitary mixture
  kThm5,        // Toeplitz dephasing vs diagonal-unitary mixture
  kConjecture,  // gain vs roof estimate on arbitrary bipartite states
};

std::string theorem_name(TheoremId id);
TheoremId theorem_from_name(const std::string& name);  // throws ConfigError

/// Conjecture campaigns are probes; a non-supported trial is not a failure
/// of the implementation. Everything else is backed by a proof and any
/// failing trial indicates a bug.
bool theorem_backed(TheoremId id);

enum class ReportFormat { kJson, kCsv };

struct CampaignConfig {
  TheoremId theorem = TheoremId::kThm1;
  int trials = 100;
  Eigen::Index dim_h = 4;   // upper bound for per-trial H dims (N for thm4/5)
  Eigen::Index dim_k = 3;   // upper bound for per-trial K dims
  int num_kraus = 3;        // upper bound for Kraus count / unitaries / atoms
  double tolerance = tol::kInequality;
  std::uint64_t master_seed = 1;
  int roof_members = 0;   // 0 selects rank^2
  int roof_restarts = 4;  // roof optimizer restarts (cor1, conjecture)
  int threads = 1;        // trial-level concurrency; does not affect results
};

struct TrialRecord {
  int trial = 0;
  std::uint64_t seed = 0;
  GainCertificate cert;     // primary inequality of the theorem
  bool pass = false;        // overall verdict including auxiliary checks
  std::string verdict;      // conjecture only: SUPPORTED / INCONCLUSIVE
  Eigen::Index dim_h = 0;   // dimensions drawn for this trial
  Eigen::Index dim_k = 0;
  int num_kraus = 0;
  std::vector<std::pair<std::string, double>> extras;
};

struct CampaignSummary {
  int pass_count = 0;
  int fail_count = 0;
  double min_margin = 0.0;
  int argmin_trial = -1;
  std::uint64_t argmin_seed = 0;
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<TrialRecord> trials;
  CampaignSummary summary;
  double wall_seconds = 0.0;  // timing metadata, not part of the numeric output
};

/// Runs exactly config.trials independent trials; trial i derives its seed
/// as mix_seed(master_seed, i). Re-running with the same config reproduces
/// every numeric field, also when trials execute on multiple threads.
CampaignReport run_campaign(const CampaignConfig& cfg);

/// Standalone reproduction of a single trial.
TrialRecord run_trial(const CampaignConfig& cfg, int trial_index);
TrialRecord run_trial_seeded(const CampaignConfig& cfg, int trial_index,
                             std::uint64_t seed);

nlohmann::json report_to_json(const CampaignReport& report);

/// One row per trial: trial, seed, lhs, rhs, margin, pass. Lossy by design;
/// JSON is the authoritative format.
std::string report_to_csv(const CampaignReport& report);

void emit_report(const CampaignReport& report, const std::string& path,
                 ReportFormat format);

}  // namespace qdeph::harness
