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

#include "qdeph/mathcore.hpp"
#include "test_helpers.hpp"

using namespace qdeph;
using testing::random_hermitian;
using testing::random_matrix;
using testing::random_psd;
using testing::sigma_x;

TEST_CASE("kron basics") {
  const CMat i2 = CMat::Identity(2, 2);
  CHECK(max_abs(kron(i2, i2) - CMat::Identity(4, 4)) == 0.0);

  CMat p(2, 2);
  p << 1, 0, 0, 0;
  CMat expected = CMat::Zero(4, 4);
  expected(0, 0) = 1;
  CHECK(max_abs(kron(p, p) - expected) == 0.0);

  // sigma_x (x) sigma_x sends basis index 0 to index 3
  const CMat xx = kron(sigma_x(), sigma_x());
  CVec e0 = CVec::Zero(4);
  e0(0) = 1;
  const CVec mapped = xx * e0;
  CHECK(std::abs(mapped(3) - Complex(1, 0)) == 0.0);
  CHECK(mapped.head(3).norm() == 0.0);
}

TEST_CASE("kron is associative and respects partial traces") {
  Rng rng(42);
  for (int rep = 0; rep < 20; ++rep) {
    const CMat a = random_matrix(2, 2, rng);
    const CMat b = random_matrix(2, 2, rng);
    const CMat c = random_matrix(2, 2, rng);
    CHECK(max_abs(kron(kron(a, b), c) - kron(a, kron(b, c))) <= 1e-12);
    CHECK(max_abs(partial_trace(kron(a, b), 2, 2, Subsystem::H) -
                  b.trace() * a) <= 1e-12);
    CHECK(max_abs(partial_trace(kron(a, b), 2, 2, Subsystem::K) -
                  a.trace() * b) <= 1e-12);
  }
}

TEST_CASE("partial trace on known states") {
  // product state e0 (x) h0
  CVec h0(3);
  h0 << Complex(0.6, 0), Complex(0, 0.8), Complex(0, 0);
  CVec psi = CVec::Zero(6);
  psi.head(3) = h0;
  const CMat rho = psi * psi.adjoint();
  CHECK(max_abs(partial_trace(rho, 2, 3, Subsystem::K) -
                h0 * h0.adjoint()) <= 1e-15);

  // Bell state: both marginals are maximally mixed
  CVec bell = CVec::Zero(4);
  bell(0) = 1.0 / std::sqrt(2.0);
  bell(3) = 1.0 / std::sqrt(2.0);
  const CMat rho_bell = bell * bell.adjoint();
  CHECK(max_abs(partial_trace(rho_bell, 2, 2, Subsystem::H) -
                0.5 * CMat::Identity(2, 2)) <= 1e-15);
  CHECK(max_abs(partial_trace(rho_bell, 2, 2, Subsystem::K) -
                0.5 * CMat::Identity(2, 2)) <= 1e-15);

  // trace is preserved
  Rng rng(3);
  const CMat m = random_matrix(6, 6, rng);
  CHECK(std::abs(partial_trace(m, 2, 3, Subsystem::K).trace() - m.trace()) <=
        1e-12);

  CHECK_THROWS_AS(partial_trace(m, 4, 2, Subsystem::K), DimensionError);
}

TEST_CASE("hermitian_eig on known matrices") {
  CMat d(2, 2);
  d << 3, 0, 0, 1;
  const auto dec = hermitian_eig(d);
  CHECK(dec.eigenvalues(0) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(dec.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-14));

  const auto decx = hermitian_eig(sigma_x());
  CHECK(decx.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(decx.eigenvalues(1) == doctest::Approx(-1.0).epsilon(1e-14));

  const auto deci = hermitian_eig(CMat::Identity(5, 5));
  CHECK((deci.eigenvalues.array() - 1.0).abs().maxCoeff() <= 1e-14);

  CMat nonherm(2, 2);
  nonherm << 0, 1, 0, 0;
  CHECK_THROWS_AS(hermitian_eig(nonherm), HermiticityError);
}

TEST_CASE("hermitian_eig invariants on random matrices") {
  Rng rng(17);
  for (int rep = 0; rep < 25; ++rep) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.uniform_int(7));
    const CMat a = random_hermitian(n, rng);
    const auto dec = hermitian_eig(a);
    const CMat u = dec.eigenvectors;
    CHECK(max_abs(u.adjoint() * u - CMat::Identity(n, n)) <= 1e-10);
    CHECK(max_abs(dec.reconstruct() - a) <= 1e-9);
    CHECK(std::abs(dec.eigenvalues.sum() - a.trace().real()) <=
          1e-10 * static_cast<double>(n));
    // descending order
    for (Eigen::Index i = 0; i + 1 < n; ++i)
      CHECK(dec.eigenvalues(i) >= dec.eigenvalues(i + 1));
  }
}

TEST_CASE("psd_check") {
  CMat d(2, 2);
  d << 1, 0, 0, 0;
  CHECK(psd_check(d, 1e-10));

  CMat indef(2, 2);
  indef << 1, 2, 2, 1;  // eigenvalues 3 and -1
  CHECK_FALSE(psd_check(indef, 1e-10));

  CHECK(psd_check(CMat::Ones(7, 7)));

  CMat nonherm(2, 2);
  nonherm << 0, 1, 0, 0;
  CHECK_THROWS_AS(psd_check(nonherm), HermiticityError);

  Rng rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.uniform_int(5));
    const CMat a = random_psd(n, rng);
    CHECK(psd_check(a, 1e-10));
    const double min_eig = hermitian_eigenvalues(a).minCoeff();
    CHECK_FALSE(psd_check(a - (min_eig + 1.0) * CMat::Identity(n, n), 1e-10));
  }
}

TEST_CASE("dft of named distributions") {
  SUBCASE("point mass at zero gives the all-ones sequence") {
    const ProbabilityDistribution pi({1.0, 0.0, 0.0, 0.0, 0.0});
    for (const auto& l : dft_sequence(pi))
      CHECK(std::abs(l - Complex(1, 0)) <= 1e-14);
  }
  SUBCASE("uniform distribution gives the delta sequence") {
    const std::size_t n = 6;
    const ProbabilityDistribution pi(std::vector<double>(n, 1.0 / n));
    const auto lambda = dft_sequence(pi);
    CHECK(std::abs(lambda[0] - Complex(1, 0)) <= 1e-14);
    for (std::size_t j = 1; j < n; ++j) CHECK(std::abs(lambda[j]) <= 1e-14);
  }
  SUBCASE("hand-expanded four-point case") {
    const ProbabilityDistribution pi({0.5, 0.25, 0.0, 0.25});
    const auto lambda = dft_sequence(pi);
    CHECK(std::abs(lambda[0] - Complex(1, 0)) <= 1e-14);
    CHECK(std::abs(lambda[1] - Complex(0.5, 0)) <= 1e-14);
    CHECK(std::abs(lambda[2] - Complex(0, 0)) <= 1e-14);
    CHECK(std::abs(lambda[3] - Complex(0.5, 0)) <= 1e-14);
  }
}

TEST_CASE("inverse dft on named sequences") {
  {
    const auto res = inverse_dft_sequence({1, 1, 1, 1});
    CHECK(res.weights[0] == doctest::Approx(1.0).epsilon(1e-14));
    for (std::size_t k = 1; k < 4; ++k)
      CHECK(std::abs(res.weights[k]) <= 1e-14);
  }
  {
    const auto res = inverse_dft_sequence({1, 0, 0, 0, 0});
    for (double w : res.weights)
      CHECK(w == doctest::Approx(0.2).epsilon(1e-14));
  }
  {
    const auto res = inverse_dft_sequence({1.0, 0.5, 0.0, 0.5});
    CHECK(res.weights[0] == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(res.weights[1] == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(std::abs(res.weights[2]) <= 1e-14);
    CHECK(res.weights[3] == doctest::Approx(0.25).epsilon(1e-13));
    for (double im : res.imags) CHECK(std::abs(im) <= 1e-14);
  }
}

TEST_CASE("dft round trip on random distributions") {
  Rng rng(99);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t n = 1 + rng.uniform_int(64);
    std::vector<double> w(n);
    double sum = 0.0;
    for (auto& x : w) {
      x = -std::log(rng.uniform() + 1e-300);
      sum += x;
    }
    for (auto& x : w) x /= sum;
    const ProbabilityDistribution pi(w);
    const auto lambda = dft_sequence(pi);
    CHECK(std::abs(lambda[0] - Complex(1, 0)) <= 1e-12);
    for (const auto& l : lambda) CHECK(std::abs(l) <= 1.0 + 1e-12);
    const auto back = inverse_dft_sequence(lambda);
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(std::abs(back.weights[k] - pi[k]) <= 1e-10);
      CHECK(std::abs(back.imags[k]) <= 1e-10);
    }
  }
}

TEST_CASE("probability distribution validation") {
  CHECK_THROWS_AS(ProbabilityDistribution({0.5, 0.4}), NormalizationError);
  CHECK_THROWS_AS(ProbabilityDistribution({1.5, -0.5}), NormalizationError);
  CHECK_THROWS_AS(ProbabilityDistribution({}), NormalizationError);
  const ProbabilityDistribution pi({0.25, 0.75});
  CHECK(pi.size() == 2);
  CHECK(pi[1] == doctest::Approx(0.75));
}
