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

#include "qdeph/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "qdeph/io.hpp"
#include "qdeph/rng.hpp"

namespace qdeph::harness {

namespace {

using io::json;

// Salt separating the roof optimizer's seed stream from the trial's own.
constexpr std::uint64_t kRoofSalt = 0x700fULL;

/// Uniform dimension in {2, ..., max_dim}; degenerate configs pass through.
Eigen::Index draw_dim(Rng& rng, Eigen::Index max_dim) {
  if (max_dim <= 2) return max_dim;
  return 2 + static_cast<Eigen::Index>(
                 rng.uniform_int(static_cast<std::uint64_t>(max_dim - 1)));
}

int draw_count(Rng& rng, int max_count) {
  if (max_count <= 1) return max_count;
  return 1 + static_cast<int>(
                 rng.uniform_int(static_cast<std::uint64_t>(max_count)));
}

std::vector<Complex> to_std(const CVec& v) {
  return {v.data(), v.data() + v.size()};
}

TrialRecord trial_eq3(const CampaignConfig& cfg, Rng& rng) {
  TrialRecord rec;
  rec.dim_h = 1;
  rec.dim_k = draw_dim(rng, cfg.dim_k);
  rec.num_kraus = draw_count(rng, cfg.num_kraus);
  const QuantumChannel omega =
      random_mixed_unitary_channel(rec.dim_k, rec.num_kraus, rng);
  const DensityMatrix rho = random_density(rec.dim_k, rng);
  rec.cert = holevo_gain_bound(omega, rho, cfg.tolerance);
  const double unital_defect =
      max_abs(omega.apply_identity() -
              CMat::Identity(rec.dim_k, rec.dim_k));
  rec.extras.emplace_back("unital_defect", unital_defect);
  // For an exactly unital channel the bound itself must vanish.
  rec.pass = rec.cert.pass && std::abs(rec.cert.rhs) <= 1e-9;
  return rec;
}

TrialRecord trial_prop1(const CampaignConfig& cfg, Rng& rng) {
  TrialRecord rec;
  rec.dim_h = draw_dim(rng, cfg.dim_h);
  rec.dim_k = draw_dim(rng, cfg.dim_k);
  rec.num_kraus = draw_count(rng, cfg.num_kraus);
  const CorrelatedStateSpec spec =
      random_correlated_spec(rec.dim_h, rec.dim_k, rng);
  const DensityMatrix rho = correlated_state(spec);
  const CMat p = support_projection(spec.vectors());
  const QuantumChannel chan =
      tensor(identity_channel(rec.dim_h),
             random_channel(rec.dim_k, rec.num_kraus, rng));
  rec.cert = projection_gain_bound(chan, rho, p, cfg.tolerance);
  rec.extras.emplace_back("idempotence_defect", max_abs(p * p - p));
  rec.extras.emplace_back("hermiticity_defect", hermiticity_defect(p));
  rec.extras.emplace_back(
      "commute_defect",
      std::max(max_abs(p * rho.matrix() - rho.matrix()),
               max_abs(rho.matrix() * p - rho.matrix())));
  bool aux = true;
  for (const auto& [name, value] : rec.extras) aux = aux && value <= 1e-10;
  rec.pass = rec.cert.pass && aux;
  return rec;
}

TrialRecord trial_thm1(const CampaignConfig& cfg, Rng& rng) {
  TrialRecord rec;
  rec.dim_h = draw_dim(rng, cfg.dim_h);
  rec.dim_k = draw_dim(rng, cfg.dim_k);
  rec.num_kraus = draw_count(rng, cfg.num_kraus);
  const CorrelatedStateSpec spec =
      random_correlated_spec(rec.dim_h, rec.dim_k, rng);
  const QuantumChannel omega = random_channel(rec.dim_k, rec.num_kraus, rng);
  rec.cert = check_theorem1(spec, omega, cfg.tolerance);
  rec.pass = rec.cert.pass;
  return rec;
}

TrialRecord trial_cor1(const CampaignConfig& cfg, Rng& rng,
                       std::uint64_t trial_seed) {
  TrialRecord rec;
  rec.dim_h = draw_dim(rng, cfg.dim_h);
  rec.dim_k = draw_dim(rng, cfg.dim_k);
  rec.num_kraus = draw_count(rng, cfg.num_kraus);
  const CorrelatedStateSpec spec =
      random_correlated_spec(rec.dim_h, rec.dim_k, rng);
  const QuantumChannel omega = random_channel(rec.dim_k, rec.num_kraus, rng);
  const Corollary1Report rep = check_corollary1(
      spec, omega, cfg.roof_members, cfg.roof_restarts,
      mix_seed(trial_seed, kRoofSalt), cfg.tolerance, 1e-6);
  rec.cert = rep.gain_vs_ensemble;
  rec.extras.emplace_back("ensemble_bound", rep.ensemble_bound);
  rec.extras.emplace_back("roof_value", rep.roof.value);
  rec.extras.emplace_back("roof_margin", rep.roof_vs_ensemble.margin);
  rec.extras.emplace_back("conjecture_margin", rep.conjecture_margin);
  rec.extras.emplace_back("roof_converged", rep.roof.converged ? 1.0 : 0.0);
  rec.pass = rep.gain_vs_ensemble.pass && rep.roof_vs_ensemble.pass;
  return rec;
}

TrialRecord trial_cor2(const CampaignConfig& cfg, Rng& rng) {
  TrialRecord rec;
  rec.dim_h = draw_dim(rng, cfg.dim_h);
  rec.dim_k = draw_dim(rng, cfg.dim_k);
  rec.num_kraus = draw_count(rng, cfg.num_kraus);
  const CorrelationMatrix corr = random_correlation(rec.dim_h, rng);
  const std::vector<Complex> nu = to_std(random_unit_vector(rec.dim_h, rng));
  std::vector<CVec> hs;
  for (Eigen::Index n = 0; n < rec.dim_h; ++n)
    hs.push_back(random_unit_vector(rec.dim_k, rng));
  const QuantumChannel omega = random_channel(rec.dim_k, rec.num_kraus, rng);
  rec.cert = check_corollary2(corr, nu, hs, omega, cfg.tolerance);
  // The state built from Schur-multiplied coefficients must agree with the
  // channel-application route.
  const DensityMatrix direct = dephase_then_correlate(corr, nu, hs);
  const DensityMatrix via_channel =
      apply(tensor(dephasing_channel(corr), identity_channel(rec.dim_k)),
            pure_correlated_state(nu, hs));
  const double path_distance =
      max_abs(direct.matrix() - via_channel.matrix());
  rec.extras.emplace_back("path_distance", path_distance);
  rec.pass = rec.cert.pass && path_distance <= 1e-10;
  return rec;
}

TrialRecord trial_thm4(const CampaignConfig& cfg, Rng& rng) {
  TrialRecord rec;
  rec.dim_h = draw_dim(rng, cfg.dim_h);  // N
  rec.dim_k = 1;
  rec.num_kraus = 0;
  const ProbabilityDistribution pi =
      random_distribution(static_cast<std::size_t>(rec.dim_h), rng);
  const double dist =
      choi_distance(phase_damping_channel(pi), shift_representation(pi));
  rec.cert = make_certificate(0.0, dist, cfg.tolerance);
  rec.pass = rec.cert.pass;
  return rec;
}

TrialRecord trial_thm5(const CampaignConfig& cfg, Rng& rng) {
  TrialRecord rec;
  rec.dim_h = draw_dim(rng, cfg.dim_h);  // truncation dimension
  rec.dim_k = 1;
  rec.num_kraus = draw_count(rng, cfg.num_kraus);  // atom count
  const CircleMeasure mu =
      random_circle_measure(static_cast<std::size_t>(rec.num_kraus), rng);
  const CMat kernel = toeplitz_kernel(mu, rec.dim_h);
  const double min_eig = hermitian_eigenvalues(kernel).minCoeff();
  const double dist = choi_distance(toeplitz_dephasing(mu, rec.dim_h),
                                    diagonal_unitary_mixture(mu, rec.dim_h));
  rec.cert = make_certificate(0.0, dist, cfg.tolerance);
  rec.extras.emplace_back("kernel_min_eigenvalue", min_eig);
  rec.pass = rec.cert.pass && min_eig >= -1e-10;
  return rec;
}

TrialRecord trial_conjecture(const CampaignConfig& cfg, Rng& rng,
                             std::uint64_t trial_seed) {
  TrialRecord rec;
  rec.dim_h = draw_dim(rng, cfg.dim_h);
  rec.dim_k = draw_dim(rng, cfg.dim_k);
  rec.num_kraus = draw_count(rng, cfg.num_kraus);
  const DensityMatrix rho = random_density(rec.dim_h * rec.dim_k, rng);
  const QuantumChannel omega = random_channel(rec.dim_k, rec.num_kraus, rng);
  const ConjectureProbe probe = probe_conjecture(
      rho, rec.dim_h, rec.dim_k, omega, cfg.roof_members, cfg.roof_restarts,
      mix_seed(trial_seed, kRoofSalt), cfg.tolerance);
  rec.cert = make_certificate(probe.gain, probe.roof.value, cfg.tolerance);
  rec.extras.emplace_back("roof_converged", probe.roof.converged ? 1.0 : 0.0);
  rec.verdict = probe.verdict == ConjectureVerdict::kSupported
                    ? "SUPPORTED"
                    : "INCONCLUSIVE";
  rec.pass = probe.verdict == ConjectureVerdict::kSupported;
  return rec;
}

void validate(const CampaignConfig& cfg) {
  if (cfg.trials < 1) throw ConfigError("config.trials must be >= 1");
  if (cfg.dim_h < 1) throw ConfigError("config.dim_h must be >= 1");
  if (cfg.dim_k < 1) throw ConfigError("config.dim_k must be >= 1");
  if (cfg.num_kraus < 1) throw ConfigError("config.num_kraus must be >= 1");
  if (!(cfg.tolerance > 0.0))
    throw ConfigError("config.tolerance must be > 0");
  if (cfg.roof_members < 0)
    throw ConfigError("config.roof_members must be >= 0");
  if (cfg.roof_restarts < 1)
    throw ConfigError("config.roof_restarts must be >= 1");
  if (cfg.threads < 1) throw ConfigError("config.threads must be >= 1");
}

}  // namespace

std::string theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::kEq3: return "eq3";
    case TheoremId::kProp1: return "prop1";
    case TheoremId::kThm1: return "thm1";
    case TheoremId::kCor1: return "cor1";
    case TheoremId::kCor2: return "cor2";
    case TheoremId::kThm4: return "thm4";
    case TheoremId::kThm5: return "thm5";
    case TheoremId::kConjecture: return "conjecture";
  }
  throw ConfigError("theorem_name: unknown id");
}

TheoremId theorem_from_name(const std::string& name) {
  for (TheoremId id :
       {TheoremId::kEq3, TheoremId::kProp1, TheoremId::kThm1, TheoremId::kCor1,
        TheoremId::kCor2, TheoremId::kThm4, TheoremId::kThm5,
        TheoremId::kConjecture}) {
    if (theorem_name(id) == name) return id;
  }
  throw ConfigError("unknown theorem id: " + name);
}

bool theorem_backed(TheoremId id) { return id != TheoremId::kConjecture; }

TrialRecord run_trial_seeded(const CampaignConfig& cfg, int trial_index,
                             std::uint64_t seed) {
  Rng rng(seed);
  TrialRecord rec;
  switch (cfg.theorem) {
    case TheoremId::kEq3: rec = trial_eq3(cfg, rng); break;
    case TheoremId::kProp1: rec = trial_prop1(cfg, rng); break;
    case TheoremId::kThm1: rec = trial_thm1(cfg, rng); break;
    case TheoremId::kCor1: rec = trial_cor1(cfg, rng, seed); break;
    case TheoremId::kCor2: rec = trial_cor2(cfg, rng); break;
    case TheoremId::kThm4: rec = trial_thm4(cfg, rng); break;
    case TheoremId::kThm5: rec = trial_thm5(cfg, rng); break;
    case TheoremId::kConjecture:
      rec = trial_conjecture(cfg, rng, seed);
      break;
  }
  rec.trial = trial_index;
  rec.seed = seed;
  return rec;
}

TrialRecord run_trial(const CampaignConfig& cfg, int trial_index) {
  return run_trial_seeded(
      cfg, trial_index,
      mix_seed(cfg.master_seed, static_cast<std::uint64_t>(trial_index)));
}

CampaignReport run_campaign(const CampaignConfig& cfg) {
  validate(cfg);
  const auto t0 = std::chrono::steady_clock::now();
  CampaignReport report;
  report.config = cfg;
  report.trials.resize(static_cast<std::size_t>(cfg.trials));

  if (cfg.threads == 1) {
    for (int i = 0; i < cfg.trials; ++i)
      report.trials[static_cast<std::size_t>(i)] = run_trial(cfg, i);
  } else {
    std::atomic<int> next{0};
    auto worker = [&]() {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= cfg.trials) return;
        report.trials[static_cast<std::size_t>(i)] = run_trial(cfg, i);
      }
    };
    std::vector<std::thread> pool;
    const int n = std::min(cfg.threads, cfg.trials);
    pool.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  CampaignSummary summary;
  summary.min_margin = std::numeric_limits<double>::infinity();
  for (const auto& rec : report.trials) {
    if (rec.pass)
      ++summary.pass_count;
    else
      ++summary.fail_count;
    if (rec.cert.margin < summary.min_margin) {
      summary.min_margin = rec.cert.margin;
      summary.argmin_trial = rec.trial;
      summary.argmin_seed = rec.seed;
    }
  }
  report.summary = summary;
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

nlohmann::json report_to_json(const CampaignReport& report) {
  const auto& cfg = report.config;
  json jcfg{{"theorem", theorem_name(cfg.theorem)},
            {"trials", cfg.trials},
            {"dim_h", cfg.dim_h},
            {"dim_k", cfg.dim_k},
            {"num_kraus", cfg.num_kraus},
            {"tolerance", cfg.tolerance},
            {"master_seed", cfg.master_seed},
            {"roof_members", cfg.roof_members},
            {"roof_restarts", cfg.roof_restarts}};
  json jtrials = json::array();
  for (const auto& rec : report.trials) {
    json jt{{"theorem", theorem_name(cfg.theorem)},
            {"trial", rec.trial},
            {"seed", rec.seed},
            {"lhs", rec.cert.lhs},
            {"rhs", rec.cert.rhs},
            {"margin", rec.cert.margin},
            {"tol", rec.cert.tolerance},
            {"pass", rec.pass},
            {"dims",
             json{{"dim_h", rec.dim_h},
                  {"dim_k", rec.dim_k},
                  {"kraus", rec.num_kraus}}}};
    if (!rec.verdict.empty()) jt["verdict"] = rec.verdict;
    for (const auto& [name, value] : rec.extras) jt[name] = value;
    jtrials.push_back(std::move(jt));
  }
  json jsummary{{"pass_count", report.summary.pass_count},
                {"fail_count", report.summary.fail_count},
                {"min_margin", report.summary.min_margin},
                {"argmin_trial", report.summary.argmin_trial},
                {"argmin_seed", report.summary.argmin_seed}};
  if (theorem_backed(cfg.theorem)) {
    jsummary["interpretation"] =
        "theorem-backed campaign: any failing trial indicates an "
        "implementation bug, not new mathematics";
  } else {
    jsummary["interpretation"] =
        "probe campaign: the roof estimator is one-sided, so verdicts are "
        "SUPPORTED or INCONCLUSIVE and never a counterexample";
  }
  return json{{"config", jcfg},
              {"trials", jtrials},
              {"summary", jsummary},
              {"wall_seconds", report.wall_seconds}};
}

std::string report_to_csv(const CampaignReport& report) {
  std::ostringstream out;
  out << "trial,seed,lhs,rhs,margin,pass\n";
  for (const auto& rec : report.trials) {
    out << rec.trial << ',' << rec.seed << ','
        << io::format_double(rec.cert.lhs) << ','
        << io::format_double(rec.cert.rhs) << ','
        << io::format_double(rec.cert.margin) << ','
        << (rec.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

void emit_report(const CampaignReport& report, const std::string& path,
                 ReportFormat format) {
  if (format == ReportFormat::kJson)
    io::save_json_file(path, report_to_json(report));
  else
    io::save_text_file(path, report_to_csv(report));
}

}  // namespace qdeph::harness
