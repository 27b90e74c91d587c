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

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qdeph/errors.hpp"

namespace qdeph {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

// Library-wide tolerances. Every operation that consumes one takes it as a
// defaulted parameter so callers can override per call.
namespace tol {
inline constexpr double kHermitian = 1e-10;    // max-norm Hermiticity slack
inline constexpr double kZeroEig = 1e-10;      // eigenvalue clamp window
inline constexpr double kSupport = 1e-12;      // support membership threshold
inline constexpr double kTracePreserve = 1e-9; // Kraus completeness slack
inline constexpr double kInequality = 1e-8;    // default certificate tolerance
inline constexpr double kChoiEqual = 1e-10;    // channel equality in max norm
inline constexpr double kUnitNorm = 1e-10;     // vector / trace normalization
}  // namespace tol

/// Largest absolute entry; the max norm used for every equality check.
double max_abs(const CMat& a);

/// ||a - a'|| in max norm.
double hermiticity_defect(const CMat& a);

bool is_hermitian(const CMat& a, double tolerance = tol::kHermitian);

/// Kronecker product, row-major index convention:
/// (a (x) b)(i*p + k, j*q + l) = a(i,j) * b(k,l) for b of shape p x q.
CMat kron(const CMat& a, const CMat& b);

enum class Subsystem { H, K };

/// Partial trace of an operator on H (x) K. keep selects the surviving
/// factor: keep = K computes Tr_H, keep = H computes Tr_K.
CMat partial_trace(const CMat& m, Eigen::Index dim_h, Eigen::Index dim_k,
                   Subsystem keep);

/// Hermitian spectral decomposition with eigenvalues sorted descending and
/// unitary eigenvector columns.
struct EigenDecomposition {
  RVec eigenvalues;   // descending
  CMat eigenvectors;  // columns, unitary

  CMat reconstruct() const {
    return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.adjoint();
  }
};

/// Throws HermiticityError when ||a - a'||_max exceeds the tolerance and
/// ConvergenceError when the solver fails.
EigenDecomposition hermitian_eig(const CMat& a,
                                 double hermitian_tol = tol::kHermitian);

/// Eigenvalues only (descending), same preconditions as hermitian_eig.
RVec hermitian_eigenvalues(const CMat& a,
                           double hermitian_tol = tol::kHermitian);

/// True iff the minimum eigenvalue is >= -tolerance.
bool psd_check(const CMat& a, double tolerance = tol::kZeroEig);

/// Nonnegative weights summing to one. The constructor validates the sum
/// against `sum_tol` and then rescales so the stored weights sum to one at
/// machine precision.
class ProbabilityDistribution {
 public:
  explicit ProbabilityDistribution(std::vector<double> weights,
                                   double sum_tol = tol::kUnitNorm);

  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }

 private:
  std::vector<double> weights_;
};

/// lambda_n = sum_k exp(2*pi*i*n*k/N) pi_k, direct O(N^2) summation.
std::vector<Complex> dft_sequence(const ProbabilityDistribution& pi);

/// Inverse transform pi_k = (1/N) sum_n exp(-2*pi*i*n*k/N) lambda_n.
/// Returns the real parts as candidate weights; the imaginary parts are
/// reported alongside for validation in classify_phase_damping.
struct InverseDftResult {
  std::vector<double> weights;  // real parts of the candidates
  std::vector<double> imags;    // imaginary parts, same indexing
};
InverseDftResult inverse_dft_sequence(const std::vector<Complex>& lambda);

}  // namespace qdeph
