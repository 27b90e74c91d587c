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

#include "qdeph/entropy.hpp"
#include "qdeph/states.hpp"
#include "test_helpers.hpp"

using namespace qdeph;

TEST_CASE("density matrix validation") {
  CHECK_NOTHROW(density_from_matrix(0.5 * CMat::Identity(2, 2)));

  CMat neg(2, 2);
  neg << 2, 0, 0, -1;
  CHECK_THROWS_AS(density_from_matrix(neg), StateError);

  CMat plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  CHECK_NOTHROW(density_from_matrix(plus));

  CMat off_trace = 0.6 * CMat::Identity(2, 2);
  CHECK_THROWS_AS(density_from_matrix(off_trace), StateError);

  CMat not_herm(2, 2);
  not_herm << 0.5, 0.5, 0.0, 0.5;
  CHECK_THROWS_AS(density_from_matrix(not_herm), StateError);

  // a tiny negative eigenvalue is clamped, not rejected
  CMat nearly(2, 2);
  nearly << 1.0 + 5e-11, 0, 0, -5e-11;
  const DensityMatrix fixed = density_from_matrix(nearly);
  CHECK(hermitian_eigenvalues(fixed.matrix()).minCoeff() >= 0.0);
  CHECK(std::abs(fixed.matrix().trace().real() - 1.0) <= 1e-14);
}

TEST_CASE("correlated states") {
  Rng rng(21);

  SUBCASE("diagonal coefficients give a block-diagonal separable state") {
    const Eigen::Index n = 4;
    CMat coeff = CMat::Identity(n, n) / static_cast<double>(n);
    std::vector<CVec> hs;
    for (Eigen::Index i = 0; i < n; ++i)
      hs.push_back(random_unit_vector(3, rng));
    const DensityMatrix rho =
        correlated_state(CorrelatedStateSpec(coeff, hs));
    CHECK(von_neumann(rho) ==
          doctest::Approx(std::log(static_cast<double>(n))).epsilon(1e-10));
  }

  SUBCASE("one-dimensional H gives a pure state on K") {
    const CVec h = random_unit_vector(4, rng);
    const DensityMatrix rho =
        correlated_state(CorrelatedStateSpec(CMat::Ones(1, 1), {h}));
    CHECK(max_abs(rho.matrix() - h * h.adjoint()) <= 1e-12);
  }

  SUBCASE("rank-one coefficients with equal vectors give a pure product") {
    const CVec nu = random_unit_vector(3, rng);
    const CVec h = random_unit_vector(2, rng);
    const CMat coeff = nu * nu.adjoint();
    const DensityMatrix rho =
        correlated_state(CorrelatedStateSpec(coeff, {h, h, h}));
    const RVec w = hermitian_eigenvalues(rho.matrix());
    CHECK(w.maxCoeff() == doctest::Approx(1.0).epsilon(1e-10));
    // equals the product state (nu nu') (x) (h h')
    CHECK(max_abs(rho.matrix() - kron(nu * nu.adjoint(), h * h.adjoint())) <=
          1e-12);
  }

  SUBCASE("marginal on K is the weighted mixture of the vectors") {
    for (int rep = 0; rep < 20; ++rep) {
      const Eigen::Index dh = 2 + static_cast<Eigen::Index>(rng.uniform_int(4));
      const Eigen::Index dk = 2 + static_cast<Eigen::Index>(rng.uniform_int(3));
      const CorrelatedStateSpec spec = random_correlated_spec(dh, dk, rng);
      const DensityMatrix rho = correlated_state(spec);
      CMat sigma = CMat::Zero(dk, dk);
      for (Eigen::Index n = 0; n < dh; ++n)
        sigma += spec.coeff()(n, n).real() *
                 (spec.vectors()[static_cast<std::size_t>(n)] *
                  spec.vectors()[static_cast<std::size_t>(n)].adjoint());
      CHECK(max_abs(partial_trace(rho.matrix(), dh, dk, Subsystem::K) -
                    sigma) <= 1e-10);
    }
  }

  SUBCASE("invalid specs are rejected") {
    CMat coeff(2, 2);
    coeff << 0.6, 0.8, 0.8, 0.4;  // not PSD
    std::vector<CVec> hs = {random_unit_vector(2, rng),
                            random_unit_vector(2, rng)};
    CHECK_THROWS_AS(CorrelatedStateSpec(coeff, hs), StateError);
    CHECK_THROWS_AS(
        CorrelatedStateSpec(CMat::Identity(2, 2), hs),  // trace 2
        StateError);
    std::vector<CVec> long_vec = {2.0 * random_unit_vector(2, rng),
                                  random_unit_vector(2, rng)};
    CHECK_THROWS_AS(
        CorrelatedStateSpec(0.5 * CMat::Identity(2, 2), long_vec),
        NormalizationError);
  }
}

TEST_CASE("pure correlated states") {
  Rng rng(22);

  SUBCASE("single nonzero amplitude gives a product basis state") {
    const CVec h = random_unit_vector(3, rng);
    const DensityMatrix rho =
        pure_correlated_state({1.0, 0.0}, {h, random_unit_vector(3, rng)});
    CVec psi = CVec::Zero(6);
    psi.head(3) = h;
    CHECK(max_abs(rho.matrix() - psi * psi.adjoint()) <= 1e-12);
  }

  SUBCASE("balanced amplitudes on orthogonal vectors are maximally "
          "entangled") {
    CVec h0 = CVec::Unit(2, 0);
    CVec h1 = CVec::Unit(2, 1);
    const double r = 1.0 / std::sqrt(2.0);
    const DensityMatrix rho = pure_correlated_state({r, r}, {h0, h1});
    const CMat marginal = partial_trace(rho.matrix(), 2, 2, Subsystem::K);
    CHECK(entropy_of_output(marginal) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-10));
  }

  SUBCASE("outputs are pure for random inputs") {
    for (int rep = 0; rep < 20; ++rep) {
      const Eigen::Index dh = 2 + static_cast<Eigen::Index>(rng.uniform_int(3));
      const Eigen::Index dk = 2 + static_cast<Eigen::Index>(rng.uniform_int(3));
      const CVec nu_vec = random_unit_vector(dh, rng);
      std::vector<Complex> nu(nu_vec.data(), nu_vec.data() + dh);
      std::vector<CVec> hs;
      for (Eigen::Index n = 0; n < dh; ++n)
        hs.push_back(random_unit_vector(dk, rng));
      const DensityMatrix rho = pure_correlated_state(nu, hs);
      const double purity =
          (rho.matrix() * rho.matrix()).trace().real();
      CHECK(std::abs(purity - 1.0) <= 1e-9);
    }
  }

  SUBCASE("normalization is enforced") {
    const CVec h = random_unit_vector(2, rng);
    CHECK_THROWS_AS(pure_correlated_state({1.0, 1.0}, {h, h}),
                    NormalizationError);
  }
}

TEST_CASE("dephasing commutes with the explicit coefficient construction") {
  Rng rng(23);
  for (int rep = 0; rep < 20; ++rep) {
    const Eigen::Index dh = 2 + static_cast<Eigen::Index>(rng.uniform_int(4));
    const Eigen::Index dk = 2 + static_cast<Eigen::Index>(rng.uniform_int(3));
    const CorrelationMatrix corr = random_correlation(dh, rng);
    const CVec nu_vec = random_unit_vector(dh, rng);
    std::vector<Complex> nu(nu_vec.data(), nu_vec.data() + dh);
    std::vector<CVec> hs;
    for (Eigen::Index n = 0; n < dh; ++n)
      hs.push_back(random_unit_vector(dk, rng));

    const DensityMatrix direct = dephase_then_correlate(corr, nu, hs);
    const DensityMatrix via_channel =
        apply(tensor(dephasing_channel(corr), identity_channel(dk)),
              pure_correlated_state(nu, hs));
    CHECK(max_abs(direct.matrix() - via_channel.matrix()) <= 1e-10);
  }

  // all-ones kernel reduces to the pure state
  const CVec h0 = random_unit_vector(2, rng);
  const CVec h1 = random_unit_vector(2, rng);
  const double r = 1.0 / std::sqrt(2.0);
  const DensityMatrix plain = pure_correlated_state({r, r}, {h0, h1});
  const DensityMatrix ones = dephase_then_correlate(
      CorrelationMatrix(CMat::Ones(2, 2)), {r, r}, {h0, h1});
  CHECK(max_abs(plain.matrix() - ones.matrix()) <= 1e-12);

  // identity kernel kills the off-diagonal blocks
  const DensityMatrix blocked = dephase_then_correlate(
      CorrelationMatrix(CMat::Identity(2, 2)), {r, r}, {h0, h1});
  CHECK(max_abs(blocked.matrix().block(0, 2, 2, 2)) <= 1e-12);
  CHECK(std::abs(blocked.matrix().block(0, 0, 2, 2).trace().real() - 0.5) <=
        1e-12);
}

TEST_CASE("pure-state decomposition") {
  Rng rng(24);

  SUBCASE("product vector") {
    const CVec h = random_unit_vector(3, rng);
    CVec e = CVec::Zero(6);
    e.head(3) = h;
    const PureStateDecomposition dec = decompose_pure(e, 2, 3);
    CHECK(std::abs(dec.amplitudes[0] - Complex(1, 0)) <= 1e-12);
    CHECK(std::abs(dec.amplitudes[1]) == 0.0);
    CHECK((dec.vectors[0] - h).norm() <= 1e-12);
  }

  SUBCASE("Bell vector") {
    CVec bell = CVec::Zero(4);
    bell(0) = 1.0 / std::sqrt(2.0);
    bell(3) = 1.0 / std::sqrt(2.0);
    const PureStateDecomposition dec = decompose_pure(bell, 2, 2);
    CHECK(std::abs(dec.amplitudes[0] - 1.0 / std::sqrt(2.0)) <= 1e-12);
    CHECK(std::abs(dec.amplitudes[1] - 1.0 / std::sqrt(2.0)) <= 1e-12);
    CHECK((dec.vectors[0] - CVec::Unit(2, 0)).norm() <= 1e-12);
    CHECK((dec.vectors[1] - CVec::Unit(2, 1)).norm() <= 1e-12);
  }

  SUBCASE("round trip through the pure-state construction") {
    for (int rep = 0; rep < 50; ++rep) {
      const Eigen::Index dh = 2 + static_cast<Eigen::Index>(rng.uniform_int(4));
      const Eigen::Index dk = 2 + static_cast<Eigen::Index>(rng.uniform_int(3));
      const CVec e = random_unit_vector(dh * dk, rng);
      const PureStateDecomposition dec = decompose_pure(e, dh, dk);
      const DensityMatrix rebuilt =
          pure_correlated_state(dec.amplitudes, dec.vectors);
      CHECK(max_abs(rebuilt.matrix() - e * e.adjoint()) <= 1e-10);
    }
  }

  CHECK_THROWS_AS(decompose_pure(2.0 * CVec::Unit(4, 0), 2, 2),
                  NormalizationError);
  CHECK_THROWS_AS(decompose_pure(CVec::Unit(5, 0), 2, 2), DimensionError);
}

TEST_CASE("support projection") {
  Rng rng(25);

  SUBCASE("equal vectors give the identity tensor a rank-one projector") {
    const CVec h = random_unit_vector(3, rng);
    const CMat p = support_projection({h, h});
    CHECK(max_abs(p - kron(CMat::Identity(2, 2), h * h.adjoint())) <= 1e-12);
  }

  SUBCASE("orthogonal vectors give rank two") {
    const CMat p =
        support_projection({CVec::Unit(2, 0), CVec::Unit(2, 1)});
    CHECK(std::abs(p.trace().real() - 2.0) <= 1e-12);
    CHECK(max_abs(p * p - p) <= 1e-12);
  }

  SUBCASE("projection properties and support inclusion on random states") {
    for (int rep = 0; rep < 50; ++rep) {
      const Eigen::Index dh = 2 + static_cast<Eigen::Index>(rng.uniform_int(4));
      const Eigen::Index dk = 2 + static_cast<Eigen::Index>(rng.uniform_int(3));
      const CorrelatedStateSpec spec = random_correlated_spec(dh, dk, rng);
      const CMat p = support_projection(spec.vectors());
      const CMat rho = correlated_state(spec).matrix();
      CHECK(max_abs(p * p - p) <= 1e-10);
      CHECK(hermiticity_defect(p) <= 1e-10);
      CHECK(max_abs(p * rho - rho) <= 1e-10);
      CHECK(max_abs(rho * p - rho) <= 1e-10);
    }
  }
}

TEST_CASE("random generators are deterministic and valid") {
  const CorrelatedStateSpec a = random_correlated_spec(3, 2, std::uint64_t{9});
  const CorrelatedStateSpec b = random_correlated_spec(3, 2, std::uint64_t{9});
  CHECK(max_abs(a.coeff() - b.coeff()) == 0.0);
  for (std::size_t n = 0; n < a.vectors().size(); ++n)
    CHECK((a.vectors()[n] - b.vectors()[n]).norm() == 0.0);

  const DensityMatrix r1 = random_density(4, std::uint64_t{10});
  const DensityMatrix r2 = random_density(4, std::uint64_t{10});
  CHECK(max_abs(r1.matrix() - r2.matrix()) == 0.0);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const CorrelatedStateSpec spec =
        random_correlated_spec(3, 3, splitmix64(seed));
    CHECK(psd_check(spec.coeff(), 1e-12));
    CHECK_NOTHROW(correlated_state(spec));
    CHECK_NOTHROW(random_density(3, splitmix64(seed ^ 0x55)));
  }
}
