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

#include "qdeph/mathcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qdeph {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double max_abs(const CMat& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const CMat& a) {
  return max_abs(a - a.adjoint());
}

bool is_hermitian(const CMat& a, double tolerance) {
  return a.rows() == a.cols() && hermiticity_defect(a) <= tolerance;
}

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMat partial_trace(const CMat& m, Eigen::Index dim_h, Eigen::Index dim_k,
                   Subsystem keep) {
  if (dim_h < 1 || dim_k < 1 || m.rows() != m.cols() ||
      m.rows() != dim_h * dim_k) {
    throw DimensionError("partial_trace: operand is not (dim_h*dim_k)-square");
  }
  if (keep == Subsystem::K) {
    CMat out = CMat::Zero(dim_k, dim_k);
    for (Eigen::Index i = 0; i < dim_h; ++i)
      out += m.block(i * dim_k, i * dim_k, dim_k, dim_k);
    return out;
  }
  CMat out = CMat::Zero(dim_h, dim_h);
  for (Eigen::Index i = 0; i < dim_h; ++i)
    for (Eigen::Index j = 0; j < dim_h; ++j)
      out(i, j) = m.block(i * dim_k, j * dim_k, dim_k, dim_k).trace();
  return out;
}

EigenDecomposition hermitian_eig(const CMat& a, double hermitian_tol) {
  if (a.rows() != a.cols())
    throw DimensionError("hermitian_eig: matrix is not square");
  if (hermiticity_defect(a) > hermitian_tol)
    throw HermiticityError("hermitian_eig: input is not Hermitian");
  // Symmetrize before solving so roundoff in the input cannot push the
  // solver off the Hermitian manifold.
  const CMat sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> solver(sym);
  if (solver.info() != Eigen::Success)
    throw ConvergenceError("hermitian_eig: eigensolver did not converge");
  EigenDecomposition dec;
  dec.eigenvalues = solver.eigenvalues().reverse();
  dec.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return dec;
}

RVec hermitian_eigenvalues(const CMat& a, double hermitian_tol) {
  if (a.rows() != a.cols())
    throw DimensionError("hermitian_eigenvalues: matrix is not square");
  if (hermiticity_defect(a) > hermitian_tol)
    throw HermiticityError("hermitian_eigenvalues: input is not Hermitian");
  const CMat sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw ConvergenceError("hermitian_eigenvalues: eigensolver did not converge");
  return solver.eigenvalues().reverse();
}

bool psd_check(const CMat& a, double tolerance) {
  const RVec w = hermitian_eigenvalues(a);
  return w.size() == 0 || w.minCoeff() >= -tolerance;
}

ProbabilityDistribution::ProbabilityDistribution(std::vector<double> weights,
                                                 double sum_tol)
    : weights_(std::move(weights)) {
  if (weights_.empty())
    throw NormalizationError("ProbabilityDistribution: no weights");
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!std::isfinite(weights_[i]) || weights_[i] < 0.0)
      throw NormalizationError("ProbabilityDistribution: weight " +
                               std::to_string(i) + " is negative or not finite");
  }
  const double sum = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (std::abs(sum - 1.0) > sum_tol)
    throw NormalizationError("ProbabilityDistribution: weights sum to " +
                             std::to_string(sum));
  for (auto& w : weights_) w /= sum;
}

std::vector<Complex> dft_sequence(const ProbabilityDistribution& pi) {
  const std::size_t n = pi.size();
  std::vector<Complex> lambda(n);
  for (std::size_t j = 0; j < n; ++j) {
    Complex acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double phase = kTwoPi * static_cast<double>(j) *
                           static_cast<double>(k) / static_cast<double>(n);
      acc += pi[k] * Complex(std::cos(phase), std::sin(phase));
    }
    lambda[j] = acc;
  }
  return lambda;
}

InverseDftResult inverse_dft_sequence(const std::vector<Complex>& lambda) {
  const std::size_t n = lambda.size();
  InverseDftResult out;
  out.weights.resize(n);
  out.imags.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double phase = -kTwoPi * static_cast<double>(j) *
                           static_cast<double>(k) / static_cast<double>(n);
      acc += lambda[j] * Complex(std::cos(phase), std::sin(phase));
    }
    acc /= static_cast<double>(n);
    out.weights[k] = acc.real();
    out.imags[k] = acc.imag();
  }
  return out;
}

}  // namespace qdeph
