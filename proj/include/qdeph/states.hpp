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
#include <vector>

#include "qdeph/channels.hpp"
#include "qdeph/mathcore.hpp"
#include "qdeph/rng.hpp"

namespace qdeph {

/// Hermitian, positive semidefinite, unit-trace matrix.
class DensityMatrix {
 public:
  /// Validates the invariants (Hermitian within 1e-10, min eigenvalue
  /// >= -1e-10, trace within 1e-10 of one) and throws StateError naming the
  /// violated one. Eigenvalues in [-1e-10, 0) are clamped to zero with the
  /// trace renormalized.
  static DensityMatrix from_matrix(const CMat& m);

  Eigen::Index dim() const { return mat_.rows(); }
  const CMat& matrix() const { return mat_; }

 private:
  explicit DensityMatrix(CMat m) : mat_(std::move(m)) {}
  CMat mat_;
};

inline DensityMatrix density_from_matrix(const CMat& m) {
  return DensityMatrix::from_matrix(m);
}

/// Apply a channel to a state; the output is validated as a DensityMatrix.
DensityMatrix apply(const QuantumChannel& chan, const DensityMatrix& rho);

/// Coefficient matrix (Hermitian, PSD, unit trace) together with unit
/// vectors h_n; the data of the correlated bipartite state family. The
/// vectors need not be distinct or orthogonal.
class CorrelatedStateSpec {
 public:
  /// Throws StateError / NormalizationError on invariant violations. The
  /// coefficient matrix is rescaled to unit trace at machine precision and
  /// the vectors to unit norm, after validating both within 1e-10.
  CorrelatedStateSpec(CMat coeff, std::vector<CVec> vectors);

  Eigen::Index dim_h() const { return coeff_.rows(); }
  Eigen::Index dim_k() const { return vectors_.front().size(); }
  const CMat& coeff() const { return coeff_; }
  const std::vector<CVec>& vectors() const { return vectors_; }

 private:
  CMat coeff_;
  std::vector<CVec> vectors_;
};

/// The bipartite state with block (n,m) equal to coeff(n,m) |h_n><h_m|.
DensityMatrix correlated_state(const CorrelatedStateSpec& spec);

/// Amplitudes and unit vectors of a pure bipartite vector, block by block.
struct PureStateDecomposition {
  std::vector<Complex> amplitudes;  // sum |nu_n|^2 = 1
  std::vector<CVec> vectors;        // unit vectors in K
};

/// |psi><psi| for psi = sum_n nu_n e_n (x) h_n. Throws NormalizationError
/// when sum |nu_n|^2 is not 1 within 1e-10 or some h_n is not unit norm.
DensityMatrix pure_correlated_state(const std::vector<Complex>& nu,
                                    const std::vector<CVec>& hs);

/// The state with coefficients kernel(n,m) * nu_n * conj(nu_m): equal to
/// applying dephasing (x) identity to pure_correlated_state(nu, hs).
DensityMatrix dephase_then_correlate(const CorrelationMatrix& corr,
                                     const std::vector<Complex>& nu,
                                     const std::vector<CVec>& hs);

/// Reads the amplitudes and K-blocks off a unit vector in H (x) K.
/// Blocks with norm below 1e-12 get amplitude zero and the first basis
/// vector as placeholder.
PureStateDecomposition decompose_pure(const CVec& e, Eigen::Index dim_h,
                                      Eigen::Index dim_k);

/// P = sum_n |e_n><e_n| (x) |h_n><h_n|. Orthogonal projection with
/// P rho = rho P = rho for every correlated state built on the same vectors.
CMat support_projection(const std::vector<CVec>& hs);

CorrelatedStateSpec random_correlated_spec(Eigen::Index dim_h,
                                           Eigen::Index dim_k,
                                           std::uint64_t seed);
CorrelatedStateSpec random_correlated_spec(Eigen::Index dim_h,
                                           Eigen::Index dim_k, Rng& rng);

/// Full-rank random state from a normalized Gaussian Gram matrix.
DensityMatrix random_density(Eigen::Index dim, std::uint64_t seed);
DensityMatrix random_density(Eigen::Index dim, Rng& rng);

/// Random state of rank at most `rank`.
DensityMatrix random_density_of_rank(Eigen::Index dim, Eigen::Index rank,
                                     Rng& rng);

}  // namespace qdeph
