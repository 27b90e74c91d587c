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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qdeph/roof.hpp"
#include "test_helpers.hpp"

using namespace qdeph;

TEST_CASE("ensemble objective") {
  Rng rng(41);
  const CVec phi = random_unit_vector(3, rng);
  const Ensemble single{{1.0}, {phi}};

  const QuantumChannel omega = random_channel(3, 2, rng);
  CHECK(ensemble_objective(single, omega) ==
        doctest::Approx(entropy_of_output(omega.apply(phi * phi.adjoint())))
            .epsilon(1e-12));

  CHECK(ensemble_objective(single, identity_channel(3)) <= 1e-12);

  Ensemble several{{0.5, 0.5},
                   {random_unit_vector(3, rng), random_unit_vector(3, rng)}};
  CHECK(ensemble_objective(several, depolarizing_channel(3, 1.0)) ==
        doctest::Approx(std::log(3.0)).epsilon(1e-12));
}

TEST_CASE("purification-freedom ensembles") {
  Rng rng(42);

  SUBCASE("identity mix gives the eigen-ensemble") {
    const DensityMatrix sigma = random_density(3, rng);
    const auto dec = hermitian_eig(sigma.matrix());
    const Ensemble ens = hjw_ensemble(sigma, CMat::Identity(3, 3));
    REQUIRE(ens.members.size() == 3);
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(ens.weights[j] ==
            doctest::Approx(dec.eigenvalues(static_cast<Eigen::Index>(j)))
                .epsilon(1e-10));
      // members match eigenvectors up to phase
      const Complex overlap =
          dec.eigenvectors.col(static_cast<Eigen::Index>(j))
              .dot(ens.members[j]);
      CHECK(std::abs(std::abs(overlap) - 1.0) <= 1e-10);
    }
  }

  SUBCASE("pure states admit only themselves") {
    const CVec h = random_unit_vector(4, rng);
    const DensityMatrix sigma = density_from_matrix(h * h.adjoint());
    const CMat mix = random_isometry(5, 1, rng);
    const Ensemble ens = hjw_ensemble(sigma, mix);
    CHECK(max_abs(ensemble_average(ens) - sigma.matrix()) <= 1e-10);
    for (const auto& f : ens.members)
      CHECK(std::abs(std::abs(h.dot(f)) - 1.0) <= 1e-10);
  }

  SUBCASE("random mixes reconstruct the state") {
    for (int rep = 0; rep < 30; ++rep) {
      const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng.uniform_int(3));
      const DensityMatrix sigma = random_density(d, rng);
      const Eigen::Index m = d + static_cast<Eigen::Index>(rng.uniform_int(5));
      const Ensemble ens = hjw_ensemble(sigma, random_isometry(m, d, rng));
      CHECK(max_abs(ensemble_average(ens) - sigma.matrix()) <= 1e-10);
      double total = 0.0;
      for (double w : ens.weights) {
        CHECK(w >= 0.0);
        total += w;
      }
      CHECK(std::abs(total - 1.0) <= 1e-10);
    }
  }

  SUBCASE("non-isometries are rejected") {
    const DensityMatrix sigma = random_density(3, rng);
    CHECK_THROWS_AS(hjw_ensemble(sigma, CMat::Ones(4, 3)), IsometryError);
    CHECK_THROWS_AS(hjw_ensemble(sigma, CMat::Identity(2, 3)), IsometryError);
  }
}

TEST_CASE("refining mixed ensemble members never increases the objective") {
  Rng rng(43);
  for (int rep = 0; rep < 15; ++rep) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng.uniform_int(3));
    const QuantumChannel omega =
        random_channel(d, 1 + static_cast<int>(rng.uniform_int(3)), rng);
    // mixed two-part split of a random state
    const int parts = 2 + static_cast<int>(rng.uniform_int(3));
    const ProbabilityDistribution q =
        random_distribution(static_cast<std::size_t>(parts), rng);
    double mixed_value = 0.0;
    double pure_value = 0.0;
    for (int a = 0; a < parts; ++a) {
      const DensityMatrix tau = random_density(d, rng);
      mixed_value += q[static_cast<std::size_t>(a)] *
                     entropy_of_output(omega.apply(tau.matrix()));
      const auto dec = hermitian_eig(tau.matrix());
      for (Eigen::Index i = 0; i < d; ++i) {
        const CVec u = dec.eigenvectors.col(i);
        pure_value += q[static_cast<std::size_t>(a)] * dec.eigenvalues(i) *
                      entropy_of_output(omega.apply(u * u.adjoint()));
      }
    }
    CHECK(pure_value <= mixed_value + 1e-9);
  }
}

TEST_CASE("roof estimate brackets and special channels") {
  Rng rng(44);

  SUBCASE("identity channel reaches zero") {
    for (int rep = 0; rep < 5; ++rep) {
      const Eigen::Index rank = 2 + static_cast<Eigen::Index>(rng.uniform_int(2));
      const DensityMatrix sigma = random_density_of_rank(4, rank, rng);
      const RoofEstimate est =
          roof_upper_bound(sigma, identity_channel(4), 0, 2, 7 + rep);
      CHECK(est.value <= 1e-6);
      CHECK(est.converged);
    }
  }

  SUBCASE("pure states have a forced estimate") {
    const CVec h = random_unit_vector(3, rng);
    const DensityMatrix sigma = density_from_matrix(h * h.adjoint());
    const QuantumChannel omega = random_channel(3, 2, rng);
    const RoofEstimate est = roof_upper_bound(sigma, omega, 0, 2, 5);
    CHECK(est.value ==
          doctest::Approx(entropy_of_output(omega.apply(h * h.adjoint())))
              .epsilon(1e-9));
  }

  SUBCASE("fully depolarizing output is decomposition independent") {
    const DensityMatrix sigma = random_density(3, rng);
    const RoofEstimate est =
        roof_upper_bound(sigma, depolarizing_channel(3, 1.0), 0, 3, 9);
    CHECK(est.value == doctest::Approx(std::log(3.0)).epsilon(1e-9));
  }

  SUBCASE("never exceeds the eigen-ensemble objective") {
    for (int rep = 0; rep < 8; ++rep) {
      const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng.uniform_int(3));
      const DensityMatrix sigma = random_density(d, rng);
      const QuantumChannel omega =
          random_channel(d, 1 + static_cast<int>(rng.uniform_int(3)), rng);
      const RoofEstimate est = roof_upper_bound(sigma, omega, 0, 2, 11 + rep);
      const Ensemble eigen_ens =
          hjw_ensemble(sigma, CMat::Identity(sigma.dim(), sigma.dim()));
      CHECK(est.value <= ensemble_objective(eigen_ens, omega) + 1e-9);
      // bracketing: between 0 and S(omega(sigma))
      CHECK(est.value >= -1e-12);
      CHECK(est.value <=
            entropy_of_output(omega.apply(sigma.matrix())) + 1e-8);
      // the reported ensemble reproduces sigma and its own value
      CHECK(max_abs(ensemble_average(est.best) - sigma.matrix()) <= 1e-8);
      CHECK(ensemble_objective(est.best, omega) ==
            doctest::Approx(est.value).epsilon(1e-9));
    }
  }

  SUBCASE("monotone in restarts under nested seeds") {
    const DensityMatrix sigma = random_density(3, rng);
    const QuantumChannel omega = random_channel(3, 3, rng);
    double previous = std::numeric_limits<double>::infinity();
    for (int restarts : {1, 2, 4, 8}) {
      const RoofEstimate est = roof_upper_bound(sigma, omega, 0, restarts, 21);
      CHECK(est.value <= previous + 1e-12);
      previous = est.value;
    }
  }

  SUBCASE("configuration errors") {
    const DensityMatrix sigma = random_density(3, rng);
    const QuantumChannel omega = random_channel(3, 2, rng);
    CHECK_THROWS_AS(roof_upper_bound(sigma, omega, 2, 2, 1), ConfigError);
    CHECK_THROWS_AS(roof_upper_bound(sigma, omega, 0, 0, 1), ConfigError);
  }
}

TEST_CASE("correlated-state bound with the roof estimate") {
  Rng rng(45);

  SUBCASE("identity channel: everything collapses to zero") {
    const CorrelatedStateSpec spec = random_correlated_spec(3, 2, rng);
    const Corollary1Report rep =
        check_corollary1(spec, identity_channel(2), 0, 2, 3);
    CHECK(std::abs(rep.gain) <= 1e-8);
    CHECK(std::abs(rep.ensemble_bound) <= 1e-12);
    CHECK(rep.roof.value <= 1e-6);
    CHECK(rep.gain_vs_ensemble.pass);
    CHECK(rep.roof_vs_ensemble.pass);
  }

  SUBCASE("diagonal coefficients give the exact equality") {
    const Eigen::Index dh = 3, dk = 2;
    const ProbabilityDistribution w =
        random_distribution(static_cast<std::size_t>(dh), rng);
    CMat coeff = CMat::Zero(dh, dh);
    for (Eigen::Index n = 0; n < dh; ++n)
      coeff(n, n) = w[static_cast<std::size_t>(n)];
    std::vector<CVec> hs;
    for (Eigen::Index n = 0; n < dh; ++n)
      hs.push_back(random_unit_vector(dk, rng));
    const QuantumChannel omega = random_channel(dk, 2, rng);
    const Corollary1Report rep =
        check_corollary1(CorrelatedStateSpec(coeff, hs), omega, 0, 4, 17);
    CHECK(std::abs(rep.gain_vs_ensemble.margin) <= 1e-8);
    CHECK(rep.roof_vs_ensemble.pass);
  }

  SUBCASE("random instances certify both comparisons") {
    for (int rep_i = 0; rep_i < 10; ++rep_i) {
      const Eigen::Index dh = 2 + static_cast<Eigen::Index>(rng.uniform_int(3));
      const Eigen::Index dk = 2 + static_cast<Eigen::Index>(rng.uniform_int(2));
      const CorrelatedStateSpec spec = random_correlated_spec(dh, dk, rng);
      const QuantumChannel omega =
          random_channel(dk, 1 + static_cast<int>(rng.uniform_int(3)), rng);
      const Corollary1Report rep =
          check_corollary1(spec, omega, 0, 6, 100 + rep_i);
      CHECK(rep.gain_vs_ensemble.pass);
      CHECK(rep.roof_vs_ensemble.pass);
    }
  }
}

TEST_CASE("conjecture probes") {
  Rng rng(46);

  SUBCASE("identity channel supports trivially") {
    const DensityMatrix rho = random_density(6, rng);
    const ConjectureProbe probe =
        probe_conjecture(rho, 2, 3, identity_channel(3), 0, 2, 3);
    CHECK(std::abs(probe.gain) <= 1e-8);
    CHECK(probe.roof.value <= 1e-6);
    CHECK(probe.verdict == ConjectureVerdict::kSupported);
  }

  SUBCASE("correlated states are supported through the theorem") {
    for (int rep = 0; rep < 5; ++rep) {
      const CorrelatedStateSpec spec = random_correlated_spec(3, 2, rng);
      const QuantumChannel omega =
          random_channel(2, 1 + static_cast<int>(rng.uniform_int(3)), rng);
      const ConjectureProbe probe =
          probe_conjecture(correlated_state(spec), 3, 2, omega, 0, 6,
                           200 + rep);
      CHECK(probe.verdict == ConjectureVerdict::kSupported);
    }
  }

  SUBCASE("product states factor the gain") {
    const DensityMatrix a = random_density(2, rng);
    const DensityMatrix b = random_density(3, rng);
    const DensityMatrix rho =
        density_from_matrix(kron(a.matrix(), b.matrix()));
    const QuantumChannel omega = random_channel(3, 2, rng);
    const ConjectureProbe probe =
        probe_conjecture(rho, 2, 3, omega, 0, 4, 31);
    CHECK(probe.gain ==
          doctest::Approx(entropy_gain(omega, b)).epsilon(1e-9));
  }

  CHECK_THROWS_AS(probe_conjecture(random_density(5, rng), 2, 3,
                                   identity_channel(3), 0, 2, 1),
                  DimensionError);
}
