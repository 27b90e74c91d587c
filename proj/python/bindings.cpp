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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qdeph/harness.hpp"
#include "qdeph/io.hpp"

namespace py = pybind11;
using namespace qdeph;

PYBIND11_MODULE(_core, m) {
  m.doc() = "dephasing channels, entropy-gain bounds and convex-closure "
            "estimation";

  py::register_exception<Error>(m, "QdephError");

  // mathcore
  py::class_<EigenDecomposition>(m, "EigenDecomposition")
      .def_readonly("eigenvalues", &EigenDecomposition::eigenvalues)
      .def_readonly("eigenvectors", &EigenDecomposition::eigenvectors)
      .def("reconstruct", &EigenDecomposition::reconstruct);

  py::enum_<Subsystem>(m, "Subsystem")
      .value("H", Subsystem::H)
      .value("K", Subsystem::K);

  m.def("kron", &kron, py::arg("a"), py::arg("b"));
  m.def("partial_trace", &partial_trace, py::arg("m"), py::arg("dim_h"),
        py::arg("dim_k"), py::arg("keep"));
  m.def("hermitian_eig", &hermitian_eig, py::arg("a"),
        py::arg("hermitian_tol") = tol::kHermitian);
  m.def("psd_check", &psd_check, py::arg("a"),
        py::arg("tolerance") = tol::kZeroEig);
  m.def("max_abs", &max_abs, py::arg("a"));

  py::class_<ProbabilityDistribution>(m, "ProbabilityDistribution")
      .def(py::init<std::vector<double>, double>(), py::arg("weights"),
           py::arg("sum_tol") = tol::kUnitNorm)
      .def_property_readonly("weights", &ProbabilityDistribution::weights)
      .def("__len__", &ProbabilityDistribution::size);

  m.def("dft_sequence", &dft_sequence, py::arg("pi"));
  m.def(
      "inverse_dft_sequence",
      [](const std::vector<Complex>& lambda) {
        const auto res = inverse_dft_sequence(lambda);
        return py::make_tuple(res.weights, res.imags);
      },
      py::arg("lambda_"), "returns (weights, imaginary_parts)");

  // channels
  py::class_<QuantumChannel>(m, "QuantumChannel")
      .def(py::init<std::vector<CMat>, double>(), py::arg("kraus"),
           py::arg("tp_tol") = tol::kTracePreserve)
      .def_property_readonly("dim_in", &QuantumChannel::dim_in)
      .def_property_readonly("dim_out", &QuantumChannel::dim_out)
      .def_property_readonly("kraus", &QuantumChannel::kraus)
      .def("apply", &QuantumChannel::apply, py::arg("rho"))
      .def("apply_identity", &QuantumChannel::apply_identity);

  py::class_<CorrelationMatrix>(m, "CorrelationMatrix")
      .def(py::init<CMat>(), py::arg("entries"))
      .def_property_readonly("dim", &CorrelationMatrix::dim)
      .def_property_readonly("entries", &CorrelationMatrix::entries);

  py::class_<CircleMeasure::Atom>(m, "CircleAtom")
      .def(py::init<double, double>(), py::arg("weight"), py::arg("angle"))
      .def_readonly("weight", &CircleMeasure::Atom::weight)
      .def_readonly("angle", &CircleMeasure::Atom::angle);

  py::class_<CircleMeasure>(m, "CircleMeasure")
      .def(py::init([](const std::vector<std::pair<double, double>>& atoms,
                       double sum_tol) {
             std::vector<CircleMeasure::Atom> out;
             out.reserve(atoms.size());
             for (const auto& [w, t] : atoms) out.push_back({w, t});
             return CircleMeasure(std::move(out), sum_tol);
           }),
           py::arg("atoms"), py::arg("sum_tol") = tol::kUnitNorm)
      .def_property_readonly("atoms", &CircleMeasure::atoms);

  py::class_<NotPhaseDamping>(m, "NotPhaseDamping")
      .def_readonly("reason", &NotPhaseDamping::reason)
      .def_readonly("index", &NotPhaseDamping::index)
      .def_readonly("value", &NotPhaseDamping::value);

  m.def("make_channel", &make_channel, py::arg("kraus"),
        py::arg("tp_tol") = tol::kTracePreserve);
  m.def("choi", &choi, py::arg("chan"));
  m.def("choi_distance", &choi_distance, py::arg("a"), py::arg("b"));
  m.def("dephasing_channel", &dephasing_channel, py::arg("corr"));
  m.def("phase_damping_channel", &phase_damping_channel, py::arg("pi"));
  m.def("shift_representation", &shift_representation, py::arg("pi"));
  m.def("toeplitz_kernel", &toeplitz_kernel, py::arg("mu"), py::arg("dim"));
  m.def("toeplitz_dephasing", &toeplitz_dephasing, py::arg("mu"),
        py::arg("dim"));
  m.def("diagonal_unitary_mixture", &diagonal_unitary_mixture, py::arg("mu"),
        py::arg("dim"));
  m.def("classify_phase_damping", &classify_phase_damping, py::arg("lambda_"));
  m.def("tensor", &tensor, py::arg("a"), py::arg("b"));
  m.def("identity_channel", &identity_channel, py::arg("dim"));
  m.def("depolarizing_channel", &depolarizing_channel, py::arg("dim"),
        py::arg("p"));
  m.def(
      "random_channel",
      [](Eigen::Index dim, int num_kraus, std::uint64_t seed) {
        return random_channel(dim, num_kraus, seed);
      },
      py::arg("dim"), py::arg("num_kraus"), py::arg("seed"));
  m.def(
      "random_mixed_unitary_channel",
      [](Eigen::Index dim, int num_unitaries, std::uint64_t seed) {
        return random_mixed_unitary_channel(dim, num_unitaries, seed);
      },
      py::arg("dim"), py::arg("num_unitaries"), py::arg("seed"));

  // states
  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def_static("from_matrix", &DensityMatrix::from_matrix, py::arg("m"))
      .def_property_readonly("dim", &DensityMatrix::dim)
      .def_property_readonly("matrix", &DensityMatrix::matrix);

  m.def("density_from_matrix", &density_from_matrix, py::arg("m"));
  m.def("apply",
        py::overload_cast<const QuantumChannel&, const DensityMatrix&>(&apply),
        py::arg("chan"), py::arg("rho"));

  py::class_<CorrelatedStateSpec>(m, "CorrelatedStateSpec")
      .def(py::init<CMat, std::vector<CVec>>(), py::arg("coeff"),
           py::arg("vectors"))
      .def_property_readonly("dim_h", &CorrelatedStateSpec::dim_h)
      .def_property_readonly("dim_k", &CorrelatedStateSpec::dim_k)
      .def_property_readonly("coeff", &CorrelatedStateSpec::coeff)
      .def_property_readonly("vectors", &CorrelatedStateSpec::vectors);

  py::class_<PureStateDecomposition>(m, "PureStateDecomposition")
      .def_readonly("amplitudes", &PureStateDecomposition::amplitudes)
      .def_readonly("vectors", &PureStateDecomposition::vectors);

  m.def("correlated_state", &correlated_state, py::arg("spec"));
  m.def("pure_correlated_state", &pure_correlated_state, py::arg("nu"),
        py::arg("hs"));
  m.def("dephase_then_correlate", &dephase_then_correlate, py::arg("corr"),
        py::arg("nu"), py::arg("hs"));
  m.def("decompose_pure", &decompose_pure, py::arg("e"), py::arg("dim_h"),
        py::arg("dim_k"));
  m.def("support_projection", &support_projection, py::arg("hs"));
  m.def(
      "random_correlated_spec",
      [](Eigen::Index dim_h, Eigen::Index dim_k, std::uint64_t seed) {
        return random_correlated_spec(dim_h, dim_k, seed);
      },
      py::arg("dim_h"), py::arg("dim_k"), py::arg("seed"));
  m.def(
      "random_density",
      [](Eigen::Index dim, std::uint64_t seed) {
        return random_density(dim, seed);
      },
      py::arg("dim"), py::arg("seed"));

  // entropy
  py::class_<GainCertificate>(m, "GainCertificate")
      .def_readonly("lhs", &GainCertificate::lhs)
      .def_readonly("rhs", &GainCertificate::rhs)
      .def_readonly("margin", &GainCertificate::margin)
      .def_readonly("tolerance", &GainCertificate::tolerance)
      .def_readonly("pass_", &GainCertificate::pass)
      .def("__repr__", [](const GainCertificate& c) {
        return "GainCertificate(lhs=" + io::format_double(c.lhs) +
               ", rhs=" + io::format_double(c.rhs) +
               ", margin=" + io::format_double(c.margin) +
               ", pass=" + (c.pass ? std::string("True") : "False") + ")";
      });

  m.def("von_neumann", &von_neumann, py::arg("rho"));
  m.def("relative_entropy", &relative_entropy, py::arg("rho"),
        py::arg("sigma"));
  m.def("entropy_gain", &entropy_gain, py::arg("chan"), py::arg("rho"));
  m.def("holevo_gain_bound", &holevo_gain_bound, py::arg("chan"),
        py::arg("rho"), py::arg("tolerance") = tol::kInequality);
  m.def("projection_gain_bound", &projection_gain_bound, py::arg("chan"),
        py::arg("rho"), py::arg("p"), py::arg("tolerance") = tol::kInequality);
  m.def("theorem1_rhs", &theorem1_rhs, py::arg("spec"), py::arg("omega"));
  m.def("check_theorem1", &check_theorem1, py::arg("spec"), py::arg("omega"),
        py::arg("tolerance") = tol::kInequality);
  m.def("check_corollary2", &check_corollary2, py::arg("corr"), py::arg("nu"),
        py::arg("hs"), py::arg("omega"),
        py::arg("tolerance") = tol::kInequality);

  // roof
  py::class_<Ensemble>(m, "Ensemble")
      .def(py::init([](std::vector<double> w, std::vector<CVec> members) {
             Ensemble e;
             e.weights = std::move(w);
             e.members = std::move(members);
             return e;
           }),
           py::arg("weights"), py::arg("members"))
      .def_readonly("weights", &Ensemble::weights)
      .def_readonly("members", &Ensemble::members);

  py::class_<RoofEstimate>(m, "RoofEstimate")
      .def_readonly("value", &RoofEstimate::value)
      .def_readonly("best", &RoofEstimate::best)
      .def_readonly("restarts_used", &RoofEstimate::restarts_used)
      .def_readonly("converged", &RoofEstimate::converged);

  py::class_<Corollary1Report>(m, "Corollary1Report")
      .def_readonly("gain", &Corollary1Report::gain)
      .def_readonly("ensemble_bound", &Corollary1Report::ensemble_bound)
      .def_readonly("roof", &Corollary1Report::roof)
      .def_readonly("gain_vs_ensemble", &Corollary1Report::gain_vs_ensemble)
      .def_readonly("roof_vs_ensemble", &Corollary1Report::roof_vs_ensemble)
      .def_readonly("conjecture_margin", &Corollary1Report::conjecture_margin);

  py::enum_<ConjectureVerdict>(m, "ConjectureVerdict")
      .value("SUPPORTED", ConjectureVerdict::kSupported)
      .value("INCONCLUSIVE", ConjectureVerdict::kInconclusive);

  py::class_<ConjectureProbe>(m, "ConjectureProbe")
      .def_readonly("gain", &ConjectureProbe::gain)
      .def_readonly("roof", &ConjectureProbe::roof)
      .def_readonly("verdict", &ConjectureProbe::verdict);

  m.def("ensemble_average", &ensemble_average, py::arg("ens"));
  m.def("ensemble_objective", &ensemble_objective, py::arg("ens"),
        py::arg("omega"));
  m.def("hjw_ensemble", &hjw_ensemble, py::arg("sigma"), py::arg("mix"));
  m.def("roof_upper_bound", &roof_upper_bound, py::arg("sigma"),
        py::arg("omega"), py::arg("members") = 0, py::arg("restarts") = 4,
        py::arg("seed") = 1);
  m.def("check_corollary1", &check_corollary1, py::arg("spec"),
        py::arg("omega"), py::arg("members") = 0, py::arg("restarts") = 4,
        py::arg("seed") = 1, py::arg("gain_tol") = tol::kInequality,
        py::arg("roof_tol") = 1e-6);
  m.def("probe_conjecture", &probe_conjecture, py::arg("rho"),
        py::arg("dim_h"), py::arg("dim_k"), py::arg("omega"),
        py::arg("members") = 0, py::arg("restarts") = 4, py::arg("seed") = 1,
        py::arg("tolerance") = tol::kInequality);

  // harness
  py::enum_<harness::TheoremId>(m, "TheoremId")
      .value("EQ3", harness::TheoremId::kEq3)
      .value("PROP1", harness::TheoremId::kProp1)
      .value("THM1", harness::TheoremId::kThm1)
      .value("COR1", harness::TheoremId::kCor1)
      .value("COR2", harness::TheoremId::kCor2)
      .value("THM4", harness::TheoremId::kThm4)
      .value("THM5", harness::TheoremId::kThm5)
      .value("CONJECTURE", harness::TheoremId::kConjecture);

  py::enum_<harness::ReportFormat>(m, "ReportFormat")
      .value("JSON", harness::ReportFormat::kJson)
      .value("CSV", harness::ReportFormat::kCsv);

  py::class_<harness::CampaignConfig>(m, "CampaignConfig")
      .def(py::init<>())
      .def_readwrite("theorem", &harness::CampaignConfig::theorem)
      .def_readwrite("trials", &harness::CampaignConfig::trials)
      .def_readwrite("dim_h", &harness::CampaignConfig::dim_h)
      .def_readwrite("dim_k", &harness::CampaignConfig::dim_k)
      .def_readwrite("num_kraus", &harness::CampaignConfig::num_kraus)
      .def_readwrite("tolerance", &harness::CampaignConfig::tolerance)
      .def_readwrite("master_seed", &harness::CampaignConfig::master_seed)
      .def_readwrite("roof_members", &harness::CampaignConfig::roof_members)
      .def_readwrite("roof_restarts", &harness::CampaignConfig::roof_restarts)
      .def_readwrite("threads", &harness::CampaignConfig::threads);

  py::class_<harness::TrialRecord>(m, "TrialRecord")
      .def_readonly("trial", &harness::TrialRecord::trial)
      .def_readonly("seed", &harness::TrialRecord::seed)
      .def_readonly("cert", &harness::TrialRecord::cert)
      .def_readonly("pass_", &harness::TrialRecord::pass)
      .def_readonly("verdict", &harness::TrialRecord::verdict)
      .def_readonly("dim_h", &harness::TrialRecord::dim_h)
      .def_readonly("dim_k", &harness::TrialRecord::dim_k)
      .def_readonly("num_kraus", &harness::TrialRecord::num_kraus)
      .def_readonly("extras", &harness::TrialRecord::extras);

  py::class_<harness::CampaignSummary>(m, "CampaignSummary")
      .def_readonly("pass_count", &harness::CampaignSummary::pass_count)
      .def_readonly("fail_count", &harness::CampaignSummary::fail_count)
      .def_readonly("min_margin", &harness::CampaignSummary::min_margin)
      .def_readonly("argmin_trial", &harness::CampaignSummary::argmin_trial)
      .def_readonly("argmin_seed", &harness::CampaignSummary::argmin_seed);

  py::class_<harness::CampaignReport>(m, "CampaignReport")
      .def_readonly("trials", &harness::CampaignReport::trials)
      .def_readonly("summary", &harness::CampaignReport::summary)
      .def_readonly("wall_seconds", &harness::CampaignReport::wall_seconds)
      .def("to_json", [](const harness::CampaignReport& rep) {
        return harness::report_to_json(rep).dump(2);
      });

  m.def("theorem_name", &harness::theorem_name, py::arg("id"));
  m.def("theorem_from_name", &harness::theorem_from_name, py::arg("name"));
  m.def("theorem_backed", &harness::theorem_backed, py::arg("id"));
  m.def("run_campaign", &harness::run_campaign, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
  m.def("run_trial", &harness::run_trial, py::arg("config"),
        py::arg("trial_index"));
  m.def("emit_report", &harness::emit_report, py::arg("report"),
        py::arg("path"), py::arg("format"));
}
