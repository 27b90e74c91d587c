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

#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <string>

#include "qdeph/harness.hpp"
#include "qdeph/io.hpp"

namespace {

using qdeph::io::json;

int cmd_verify(const std::string& theorem, int trials, Eigen::Index dim_h,
               Eigen::Index dim_k, int kraus, double tolerance,
               std::uint64_t seed, int roof_members, int roof_restarts,
               int threads, const std::string& out_path,
               const std::string& format) {
  qdeph::harness::CampaignConfig cfg;
  cfg.theorem = qdeph::harness::theorem_from_name(theorem);
  cfg.trials = trials;
  cfg.dim_h = dim_h;
  cfg.dim_k = dim_k;
  cfg.num_kraus = kraus;
  cfg.tolerance = tolerance;
  cfg.master_seed = seed;
  cfg.roof_members = roof_members;
  cfg.roof_restarts = roof_restarts;
  cfg.threads = threads;

  const auto report = qdeph::harness::run_campaign(cfg);
  if (!out_path.empty()) {
    qdeph::harness::emit_report(report, out_path,
                                format == "csv"
                                    ? qdeph::harness::ReportFormat::kCsv
                                    : qdeph::harness::ReportFormat::kJson);
  }
  std::cout << "theorem=" << theorem << " trials=" << report.trials.size()
            << " pass=" << report.summary.pass_count
            << " fail=" << report.summary.fail_count
            << " min_margin=" << qdeph::io::format_double(
                                     report.summary.min_margin)
            << " argmin_trial=" << report.summary.argmin_trial << "\n";
  const bool failed = qdeph::harness::theorem_backed(cfg.theorem) &&
                      report.summary.fail_count > 0;
  return failed ? 1 : 0;
}

int cmd_classify(const std::string& input) {
  const json j = qdeph::io::load_json_file(input);
  const auto lambda = qdeph::io::lambda_from_json(j);
  const auto outcome = qdeph::classify_phase_damping(lambda);
  json verdict;
  if (const auto* pi = std::get_if<qdeph::ProbabilityDistribution>(&outcome)) {
    verdict = json{{"phase_damping", true}, {"pi", pi->weights()}};
  } else {
    const auto& bad = std::get<qdeph::NotPhaseDamping>(outcome);
    verdict = json{{"phase_damping", false},
                   {"violation",
                    json{{"reason", bad.reason},
                         {"index", bad.index},
                         {"value", bad.value}}}};
  }
  std::cout << verdict.dump(2) << "\n";
  return 0;
}

int cmd_build_channel(const std::string& dist_path,
                      const std::string& out_path) {
  const auto pi =
      qdeph::io::distribution_from_json(qdeph::io::load_json_file(dist_path));
  const auto chan = qdeph::phase_damping_channel(pi);
  qdeph::io::save_json_file(out_path, qdeph::io::channel_to_json(chan));
  std::cout << "wrote phase-damping channel of dimension " << chan.dim_in()
            << " with " << chan.kraus().size() << " Kraus operators to "
            << out_path << "\n";
  return 0;
}

int cmd_roof(const std::string& state_path, const std::string& channel_path,
             int ensemble_size, int restarts, std::uint64_t seed) {
  const auto state =
      qdeph::io::state_from_json(qdeph::io::load_json_file(state_path));
  const auto chan =
      qdeph::io::channel_from_json(qdeph::io::load_json_file(channel_path));
  const auto est = qdeph::roof_upper_bound(state.state, chan, ensemble_size,
                                           restarts, seed);
  std::cout << qdeph::io::roof_to_json(est).dump(2) << "\n";
  return 0;
}

int cmd_demo() {
  std::cout << "== equality cases and representative checks ==\n\n";

  // Complete dephasing turns a pure superposition into the uniform mixture.
  {
    qdeph::CMat plus(2, 2);
    plus << 0.5, 0.5, 0.5, 0.5;
    const auto rho = qdeph::density_from_matrix(plus);
    const auto chan =
        qdeph::dephasing_channel(qdeph::CorrelationMatrix(
            qdeph::CMat::Identity(2, 2)));
    std::cout << "entropy gain of complete dephasing on |+><+|: "
              << qdeph::entropy_gain(chan, rho) << " (log 2 = " << std::log(2.0)
              << ")\n";
  }

  // Diagonal coefficients make the correlated-state bound exactly tight.
  {
    qdeph::Rng rng(7);
    qdeph::CMat coeff = qdeph::CMat::Zero(3, 3);
    coeff.diagonal() << 0.5, 0.3, 0.2;
    std::vector<qdeph::CVec> hs;
    for (int n = 0; n < 3; ++n)
      hs.push_back(qdeph::random_unit_vector(3, rng));
    const qdeph::CorrelatedStateSpec spec(coeff, hs);
    const auto omega = qdeph::random_channel(3, 2, 11);
    const auto cert = qdeph::check_theorem1(spec, omega);
    std::cout << "correlated-state bound, diagonal coefficients: margin = "
              << cert.margin << " (expected 0)\n";
  }

  // Kernel route and shift-unitary route build the same channel.
  {
    const qdeph::ProbabilityDistribution pi({0.5, 0.25, 0.0, 0.25});
    const double dist = qdeph::choi_distance(qdeph::phase_damping_channel(pi),
                                             qdeph::shift_representation(pi));
    std::cout << "phase damping vs shift mixture, Choi distance: " << dist
              << "\n";
  }

  // Kernel classification in both directions.
  {
    const auto good = qdeph::classify_phase_damping(
        {1.0, 0.5, 0.0, 0.5});
    const auto* pi = std::get_if<qdeph::ProbabilityDistribution>(&good);
    std::cout << "classify (1, 1/2, 0, 1/2): phase damping with pi = (";
    for (std::size_t i = 0; i < pi->size(); ++i)
      std::cout << (i ? ", " : "") << (*pi)[i];
    std::cout << ")\n";
    const auto bad = qdeph::classify_phase_damping({1.0, 2.0});
    const auto& viol = std::get<qdeph::NotPhaseDamping>(bad);
    std::cout << "classify (1, 2): not phase damping, candidate pi_"
              << viol.index << " = " << viol.value << "\n";
  }

  // Fully depolarizing output entropy is decomposition independent.
  {
    qdeph::Rng rng(13);
    const auto sigma = qdeph::random_density(3, rng);
    const auto est = qdeph::roof_upper_bound(
        sigma, qdeph::depolarizing_channel(3, 1.0), 0, 2, 5);
    std::cout << "roof estimate under full depolarizing (dim 3): "
              << est.value << " (log 3 = " << std::log(3.0) << ")\n";
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dephasing channels, entropy-gain bounds and convex-closure "
               "estimation"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand(
      "verify", "run a randomized verification campaign");
  std::string theorem;
  int trials = 100;
  Eigen::Index dim_h = 4, dim_k = 3;
  int kraus = 3;
  double tolerance = 1e-8;
  std::uint64_t seed = 1;
  int roof_members = 0, roof_restarts = 4, threads = 1;
  std::string out_path, format = "json";
  verify->add_option("--theorem", theorem,
                     "one of eq3|prop1|thm1|cor1|cor2|thm4|thm5|conjecture")
      ->required();
  verify->add_option("--trials", trials, "number of trials");
  verify->add_option("--dim-h", dim_h, "max H dimension (N for thm4/thm5)");
  verify->add_option("--dim-k", dim_k, "max K dimension");
  verify->add_option("--kraus", kraus, "max Kraus operators / mixture size");
  verify->add_option("--tol", tolerance, "certificate tolerance");
  verify->add_option("--seed", seed, "master seed");
  verify->add_option("--roof-members", roof_members,
                     "roof ensemble size (0 = rank^2)");
  verify->add_option("--roof-restarts", roof_restarts, "roof restarts");
  verify->add_option("--threads", threads, "concurrent trial workers");
  verify->add_option("--out", out_path, "report output path");
  verify->add_option("--format", format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // classify
  auto* classify =
      app.add_subcommand("classify", "decide whether a kernel sequence is "
                                     "the transform of a distribution");
  std::string classify_input;
  classify->add_option("--input", classify_input, "path to a lambda sequence")
      ->required();

  // build-channel
  auto* build = app.add_subcommand(
      "build-channel", "construct a phase-damping channel from a distribution");
  std::string dist_path, channel_out;
  build->add_option("--distribution", dist_path, "distribution JSON path")
      ->required();
  build->add_option("--out", channel_out, "channel JSON output path")
      ->required();

  // roof
  auto* roof = app.add_subcommand(
      "roof", "estimate the convex closure of the output entropy");
  std::string state_path, channel_path;
  int ensemble_size = 0, restarts = 4;
  std::uint64_t roof_seed = 1;
  roof->add_option("--state", state_path, "state JSON path")->required();
  roof->add_option("--channel", channel_path, "channel JSON path")->required();
  roof->add_option("--ensemble-size", ensemble_size,
                   "ensemble members (0 = rank^2)");
  roof->add_option("--restarts", restarts, "optimizer restarts");
  roof->add_option("--seed", roof_seed, "optimizer seed");

  // demo
  auto* demo = app.add_subcommand("demo", "run the equality-case showcases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (verify->parsed())
      return cmd_verify(theorem, trials, dim_h, dim_k, kraus, tolerance, seed,
                        roof_members, roof_restarts, threads, out_path,
                        format);
    if (classify->parsed()) return cmd_classify(classify_input);
    if (build->parsed()) return cmd_build_channel(dist_path, channel_out);
    if (roof->parsed())
      return cmd_roof(state_path, channel_path, ensemble_size, restarts,
                      roof_seed);
    if (demo->parsed()) return cmd_demo();
  } catch (const qdeph::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
