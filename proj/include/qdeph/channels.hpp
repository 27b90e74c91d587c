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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qdeph/mathcore.hpp"
#include "qdeph/rng.hpp"

namespace qdeph {

/// Completely positive trace-preserving map in Kraus form. Immutable after
/// construction; the constructor enforces ||sum_j V_j' V_j - I||_max within
/// the trace-preservation tolerance.
class QuantumChannel {
 public:
  /// Validates shapes and trace preservation.
  /// Throws DimensionError on inconsistent shapes, TPError otherwise.
  explicit QuantumChannel(std::vector<CMat> kraus,
                          double tp_tol = tol::kTracePreserve);

  Eigen::Index dim_in() const { return dim_in_; }
  Eigen::Index dim_out() const { return dim_out_; }
  const std::vector<CMat>& kraus() const { return kraus_; }

  /// sum_j V_j rho V_j' on a raw matrix. Throws DimensionError.
  CMat apply(const CMat& rho) const;

  /// Image of the identity, sum_j V_j V_j'.
  CMat apply_identity() const;

 private:
  Eigen::Index dim_in_;
  Eigen::Index dim_out_;
  std::vector<CMat> kraus_;
};

/// Same validation path under the operation name used throughout.
inline QuantumChannel make_channel(std::vector<CMat> kraus,
                                   double tp_tol = tol::kTracePreserve) {
  return QuantumChannel(std::move(kraus), tp_tol);
}

/// Choi matrix: (Id (x) chan) applied to the unnormalized maximally
/// entangled matrix sum_ij |ii><jj|. Block (i,j) equals chan(|i><j|).
/// Channels are equal iff their Choi matrices are equal.
CMat choi(const QuantumChannel& chan);

/// Max-norm distance between Choi matrices; the library's channel-equality
/// oracle. Throws DimensionError when dimensions differ.
double choi_distance(const QuantumChannel& a, const QuantumChannel& b);

/// Positive semidefinite Hermitian kernel with unit diagonal; the Schur
/// multiplier of a dephasing channel.
class CorrelationMatrix {
 public:
  /// Throws CorrelationError when the invariants are violated.
  explicit CorrelationMatrix(CMat entries);

  Eigen::Index dim() const { return entries_.rows(); }
  const CMat& entries() const { return entries_; }

 private:
  CMat entries_;
};

/// Finitely atomic probability measure on the unit circle, angles t in [0,1).
class CircleMeasure {
 public:
  struct Atom {
    double weight;
    double angle;  // t in [0,1); the circle point is exp(2*pi*i*t)
  };

  /// Throws MeasureError on negative weights, angles outside [0,1), or a
  /// weight sum not within sum_tol of one. Stored weights are rescaled to
  /// sum to one exactly.
  explicit CircleMeasure(std::vector<Atom> atoms,
                         double sum_tol = tol::kUnitNorm);

  const std::vector<Atom>& atoms() const { return atoms_; }

 private:
  std::vector<Atom> atoms_;
};

/// Channel acting entrywise as rho -> kernel (Schur) rho in the standard
/// basis. Kraus operators come from the kernel's spectral decomposition:
/// kernel = sum_k mu_k w_k w_k' gives V_k = diag(sqrt(mu_k) w_k), with
/// eigenvalues below 1e-12 dropped.
QuantumChannel dephasing_channel(const CorrelationMatrix& corr);

/// Phase damping from a distribution: lambda = dft_sequence(pi), circulant
/// kernel K(n,m) = lambda_{(n-m) mod N}, then dephasing_channel.
QuantumChannel phase_damping_channel(const ProbabilityDistribution& pi);

/// Random-unitary form of the same channel: Kraus {sqrt(pi_n) U^n} with
/// U = diag(exp(2*pi*i*n/N)). Choi-equal to phase_damping_channel(pi).
QuantumChannel shift_representation(const ProbabilityDistribution& pi);

/// The Toeplitz kernel K(n,m) = lambda_{n-m} with
/// lambda_j = sum_a w_a exp(2*pi*i*j*t_a); PSD with unit diagonal.
CMat toeplitz_kernel(const CircleMeasure& mu, Eigen::Index dim);

/// Toeplitz dephasing at finite dimension from an atomic circle measure.
QuantumChannel toeplitz_dephasing(const CircleMeasure& mu, Eigen::Index dim);

/// The mixture sum_a w_a U_{t_a} rho U_{t_a}' with U_t = diag(exp(2*pi*i*n*t));
/// Choi-equal to toeplitz_dephasing(mu, dim).
QuantumChannel diagonal_unitary_mixture(const CircleMeasure& mu,
                                        Eigen::Index dim);

/// Negative verdict of classify_phase_damping: the first violated condition.
struct NotPhaseDamping {
  std::string reason;  // "negative", "imaginary" or "sum"
  Eigen::Index index;  // violating candidate index (-1 for "sum")
  double value;        // offending value (candidate, imag part, or sum)
};

using ClassifyOutcome = std::variant<ProbabilityDistribution, NotPhaseDamping>;

/// Runs the inverse transform on a candidate kernel sequence and accepts iff
/// all candidates are >= -1e-10 (then clamped to 0), imaginary parts are
/// <= 1e-10 and the total is within 1e-8 of one. Rejection is a result, not
/// an error.
ClassifyOutcome classify_phase_damping(const std::vector<Complex>& lambda);

/// Kraus set {kron(A_i, B_j)}; dimensions multiply.
QuantumChannel tensor(const QuantumChannel& a, const QuantumChannel& b);

QuantumChannel identity_channel(Eigen::Index dim);

/// rho -> (1-p) rho + p Tr(rho) I/d.
QuantumChannel depolarizing_channel(Eigen::Index dim, double p);

/// Haar-distributed isometry V : C^d -> C^d (x) C^num_kraus obtained by
/// orthonormalizing a complex Gaussian matrix; Kraus V_j = (I (x) <j|) V.
/// Deterministic in the seed.
QuantumChannel random_channel(Eigen::Index dim, int num_kraus,
                              std::uint64_t seed);
QuantumChannel random_channel(Eigen::Index dim, int num_kraus, Rng& rng);

/// Mixture of Haar-random unitaries with uniform-simplex weights; unital by
/// construction. Test fixture for the unital-channel regime.
QuantumChannel random_mixed_unitary_channel(Eigen::Index dim, int num_unitaries,
                                            std::uint64_t seed);
QuantumChannel random_mixed_unitary_channel(Eigen::Index dim, int num_unitaries,
                                            Rng& rng);

/// Gram matrix of random unit vectors: PSD with exactly unit diagonal.
CorrelationMatrix random_correlation(Eigen::Index dim, Rng& rng);

/// Uniform-simplex random distribution (normalized exponentials).
ProbabilityDistribution random_distribution(std::size_t n, Rng& rng);

/// Random atomic measure: uniform-simplex weights, uniform angles in [0,1).
CircleMeasure random_circle_measure(std::size_t num_atoms, Rng& rng);

/// Haar-random unitary via QR of a complex Gaussian matrix with the phase
/// correction that makes the distribution exactly Haar.
CMat random_unitary(Eigen::Index dim, Rng& rng);

/// Random isometry with orthonormal columns (rows x cols, rows >= cols).
CMat random_isometry(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Unit-norm complex Gaussian vector.
CVec random_unit_vector(Eigen::Index dim, Rng& rng);

}  // namespace qdeph
