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

#include "qdeph/channels.hpp"

#include <cmath>
#include <utility>

namespace qdeph {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kKrausDrop = 1e-12;  // kernel eigenvalues below this are dropped

Complex unit_phase(double turns) {
  const double a = kTwoPi * turns;
  return {std::cos(a), std::sin(a)};
}

}  // namespace

QuantumChannel::QuantumChannel(std::vector<CMat> kraus, double tp_tol)
    : kraus_(std::move(kraus)) {
  if (kraus_.empty())
    throw DimensionError("QuantumChannel: at least one Kraus operator required");
  dim_out_ = kraus_.front().rows();
  dim_in_ = kraus_.front().cols();
  if (dim_in_ < 1 || dim_out_ < 1)
    throw DimensionError("QuantumChannel: empty Kraus operator");
  for (const auto& v : kraus_) {
    if (v.rows() != dim_out_ || v.cols() != dim_in_)
      throw DimensionError("QuantumChannel: Kraus operators have mixed shapes");
  }
  CMat completeness = CMat::Zero(dim_in_, dim_in_);
  for (const auto& v : kraus_) completeness += v.adjoint() * v;
  const double defect =
      max_abs(completeness - CMat::Identity(dim_in_, dim_in_));
  if (defect > tp_tol)
    throw TPError("QuantumChannel: sum V'V deviates from identity by " +
                  std::to_string(defect));
}

CMat QuantumChannel::apply(const CMat& rho) const {
  if (rho.rows() != dim_in_ || rho.cols() != dim_in_)
    throw DimensionError("QuantumChannel::apply: state dimension mismatch");
  CMat out = CMat::Zero(dim_out_, dim_out_);
  for (const auto& v : kraus_) out += v * rho * v.adjoint();
  return out;
}

CMat QuantumChannel::apply_identity() const {
  CMat out = CMat::Zero(dim_out_, dim_out_);
  for (const auto& v : kraus_) out += v * v.adjoint();
  return out;
}

CMat choi(const QuantumChannel& chan) {
  const Eigen::Index din = chan.dim_in();
  const Eigen::Index dout = chan.dim_out();
  CMat c = CMat::Zero(din * dout, din * dout);
  for (const auto& v : chan.kraus()) {
    // Block (i,j) of sum_ij E_ij (x) V E_ij V' is (col_i V)(col_j V)'.
    for (Eigen::Index i = 0; i < din; ++i)
      for (Eigen::Index j = 0; j < din; ++j)
        c.block(i * dout, j * dout, dout, dout) +=
            v.col(i) * v.col(j).adjoint();
  }
  return c;
}

double choi_distance(const QuantumChannel& a, const QuantumChannel& b) {
  if (a.dim_in() != b.dim_in() || a.dim_out() != b.dim_out())
    throw DimensionError("choi_distance: channel dimensions differ");
  return max_abs(choi(a) - choi(b));
}

CorrelationMatrix::CorrelationMatrix(CMat entries)
    : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1)
    throw CorrelationError("CorrelationMatrix: kernel is not square");
  if (hermiticity_defect(entries_) > tol::kHermitian)
    throw CorrelationError("CorrelationMatrix: kernel is not Hermitian");
  for (Eigen::Index n = 0; n < entries_.rows(); ++n) {
    if (std::abs(entries_(n, n) - 1.0) > tol::kUnitNorm)
      throw CorrelationError("CorrelationMatrix: diagonal entry " +
                             std::to_string(n) + " is not 1");
  }
  if (!psd_check(entries_, tol::kZeroEig))
    throw CorrelationError("CorrelationMatrix: kernel is not PSD");
}

CircleMeasure::CircleMeasure(std::vector<Atom> atoms, double sum_tol)
    : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw MeasureError("CircleMeasure: no atoms");
  double sum = 0.0;
  for (const auto& a : atoms_) {
    if (!std::isfinite(a.weight) || a.weight < 0.0)
      throw MeasureError("CircleMeasure: negative or non-finite weight");
    if (!std::isfinite(a.angle) || a.angle < 0.0 || a.angle >= 1.0)
      throw MeasureError("CircleMeasure: angle outside [0,1)");
    sum += a.weight;
  }
  if (std::abs(sum - 1.0) > sum_tol)
    throw MeasureError("CircleMeasure: weights sum to " + std::to_string(sum));
  for (auto& a : atoms_) a.weight /= sum;
}

QuantumChannel dephasing_channel(const CorrelationMatrix& corr) {
  const Eigen::Index n = corr.dim();
  const EigenDecomposition dec = hermitian_eig(corr.entries());
  std::vector<CMat> kraus;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double mu = dec.eigenvalues(k);
    if (mu <= kKrausDrop) continue;
    CMat v = CMat::Zero(n, n);
    v.diagonal() = std::sqrt(mu) * dec.eigenvectors.col(k);
    kraus.push_back(std::move(v));
  }
  return QuantumChannel(std::move(kraus));
}

QuantumChannel phase_damping_channel(const ProbabilityDistribution& pi) {
  const auto lambda = dft_sequence(pi);
  const Eigen::Index n = static_cast<Eigen::Index>(lambda.size());
  CMat kernel(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      kernel(a, b) = lambda[static_cast<std::size_t>(((a - b) % n + n) % n)];
  return dephasing_channel(CorrelationMatrix(kernel));
}

QuantumChannel shift_representation(const ProbabilityDistribution& pi) {
  const Eigen::Index n = static_cast<Eigen::Index>(pi.size());
  std::vector<CMat> kraus;
  for (Eigen::Index p = 0; p < n; ++p) {
    const double w = pi[static_cast<std::size_t>(p)];
    if (w == 0.0) continue;
    CMat v = CMat::Zero(n, n);
    for (Eigen::Index a = 0; a < n; ++a)
      v(a, a) = std::sqrt(w) * unit_phase(static_cast<double>(p) *
                                          static_cast<double>(a) /
                                          static_cast<double>(n));
    kraus.push_back(std::move(v));
  }
  return QuantumChannel(std::move(kraus));
}

CMat toeplitz_kernel(const CircleMeasure& mu, Eigen::Index dim) {
  if (dim < 1) throw DimensionError("toeplitz_kernel: dim must be >= 1");
  CMat kernel(dim, dim);
  for (Eigen::Index a = 0; a < dim; ++a) {
    for (Eigen::Index b = 0; b < dim; ++b) {
      Complex acc = 0.0;
      for (const auto& atom : mu.atoms())
        acc += atom.weight * unit_phase(static_cast<double>(a - b) * atom.angle);
      kernel(a, b) = acc;
    }
  }
  return kernel;
}

QuantumChannel toeplitz_dephasing(const CircleMeasure& mu, Eigen::Index dim) {
  return dephasing_channel(CorrelationMatrix(toeplitz_kernel(mu, dim)));
}

QuantumChannel diagonal_unitary_mixture(const CircleMeasure& mu,
                                        Eigen::Index dim) {
  if (dim < 1)
    throw DimensionError("diagonal_unitary_mixture: dim must be >= 1");
  std::vector<CMat> kraus;
  for (const auto& atom : mu.atoms()) {
    if (atom.weight == 0.0) continue;
    CMat v = CMat::Zero(dim, dim);
    for (Eigen::Index a = 0; a < dim; ++a)
      v(a, a) =
          std::sqrt(atom.weight) * unit_phase(static_cast<double>(a) * atom.angle);
    kraus.push_back(std::move(v));
  }
  return QuantumChannel(std::move(kraus));
}

ClassifyOutcome classify_phase_damping(const std::vector<Complex>& lambda) {
  const InverseDftResult inv = inverse_dft_sequence(lambda);
  std::vector<double> weights = inv.weights;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (weights[k] < -tol::kZeroEig)
      return NotPhaseDamping{"negative", static_cast<Eigen::Index>(k),
                             weights[k]};
    if (weights[k] < 0.0) weights[k] = 0.0;
  }
  std::size_t worst = 0;
  for (std::size_t k = 0; k < inv.imags.size(); ++k)
    if (std::abs(inv.imags[k]) > std::abs(inv.imags[worst])) worst = k;
  if (!inv.imags.empty() && std::abs(inv.imags[worst]) > tol::kZeroEig)
    return NotPhaseDamping{"imaginary", static_cast<Eigen::Index>(worst),
                           inv.imags[worst]};
  double sum = 0.0;
  for (double w : weights) sum += w;
  if (std::abs(sum - 1.0) > 1e-8) return NotPhaseDamping{"sum", -1, sum};
  return ProbabilityDistribution(std::move(weights), 1e-8);
}

QuantumChannel tensor(const QuantumChannel& a, const QuantumChannel& b) {
  std::vector<CMat> kraus;
  kraus.reserve(a.kraus().size() * b.kraus().size());
  for (const auto& va : a.kraus())
    for (const auto& vb : b.kraus()) kraus.push_back(kron(va, vb));
  return QuantumChannel(std::move(kraus));
}

QuantumChannel identity_channel(Eigen::Index dim) {
  if (dim < 1) throw DimensionError("identity_channel: dim must be >= 1");
  return QuantumChannel({CMat::Identity(dim, dim)});
}

QuantumChannel depolarizing_channel(Eigen::Index dim, double p) {
  if (dim < 1) throw DimensionError("depolarizing_channel: dim must be >= 1");
  if (p < 0.0 || p > 1.0)
    throw ConfigError("depolarizing_channel: p must lie in [0,1]");
  std::vector<CMat> kraus;
  if (p < 1.0)
    kraus.push_back(std::sqrt(1.0 - p) * CMat::Identity(dim, dim));
  if (p > 0.0) {
    const double scale = std::sqrt(p / static_cast<double>(dim));
    for (Eigen::Index i = 0; i < dim; ++i)
      for (Eigen::Index j = 0; j < dim; ++j) {
        CMat v = CMat::Zero(dim, dim);
        v(i, j) = scale;
        kraus.push_back(std::move(v));
      }
  }
  return QuantumChannel(std::move(kraus));
}

CMat random_isometry(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  if (rows < cols || cols < 1)
    throw DimensionError("random_isometry: need rows >= cols >= 1");
  CMat g(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) g(i, j) = rng.cnormal();
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ() * CMat::Identity(rows, cols);
  // Fix the R-diagonal phases so the column distribution is exactly Haar.
  const CMat r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < cols; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

CMat random_unitary(Eigen::Index dim, Rng& rng) {
  return random_isometry(dim, dim, rng);
}

CVec random_unit_vector(Eigen::Index dim, Rng& rng) {
  if (dim < 1) throw DimensionError("random_unit_vector: dim must be >= 1");
  CVec v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = rng.cnormal();
  return v / v.norm();
}

QuantumChannel random_channel(Eigen::Index dim, int num_kraus, Rng& rng) {
  if (dim < 1 || num_kraus < 1)
    throw DimensionError("random_channel: need dim >= 1 and num_kraus >= 1");
  // Isometry C^dim -> C^dim (x) C^num_kraus with rows indexed (a, j) -> a*J+j.
  const CMat v = random_isometry(dim * num_kraus, dim, rng);
  std::vector<CMat> kraus(static_cast<std::size_t>(num_kraus));
  for (int j = 0; j < num_kraus; ++j) {
    CMat vj(dim, dim);
    for (Eigen::Index a = 0; a < dim; ++a)
      vj.row(a) = v.row(a * num_kraus + j);
    kraus[static_cast<std::size_t>(j)] = std::move(vj);
  }
  return QuantumChannel(std::move(kraus));
}

QuantumChannel random_channel(Eigen::Index dim, int num_kraus,
                              std::uint64_t seed) {
  Rng rng(seed);
  return random_channel(dim, num_kraus, rng);
}

QuantumChannel random_mixed_unitary_channel(Eigen::Index dim,
                                            int num_unitaries, Rng& rng) {
  if (dim < 1 || num_unitaries < 1)
    throw DimensionError(
        "random_mixed_unitary_channel: need dim >= 1 and num_unitaries >= 1");
  const ProbabilityDistribution p =
      random_distribution(static_cast<std::size_t>(num_unitaries), rng);
  std::vector<CMat> kraus;
  for (int j = 0; j < num_unitaries; ++j)
    kraus.push_back(std::sqrt(p[static_cast<std::size_t>(j)]) *
                    random_unitary(dim, rng));
  return QuantumChannel(std::move(kraus));
}

QuantumChannel random_mixed_unitary_channel(Eigen::Index dim,
                                            int num_unitaries,
                                            std::uint64_t seed) {
  Rng rng(seed);
  return random_mixed_unitary_channel(dim, num_unitaries, rng);
}

CorrelationMatrix random_correlation(Eigen::Index dim, Rng& rng) {
  std::vector<CVec> g;
  g.reserve(static_cast<std::size_t>(dim));
  for (Eigen::Index i = 0; i < dim; ++i)
    g.push_back(random_unit_vector(dim, rng));
  CMat kernel(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j)
      kernel(i, j) = g[static_cast<std::size_t>(i)].dot(
          g[static_cast<std::size_t>(j)]);
    kernel(i, i) = 1.0;  // dot(v, v) is 1 up to rounding; pin it
  }
  return CorrelationMatrix(std::move(kernel));
}

ProbabilityDistribution random_distribution(std::size_t n, Rng& rng) {
  std::vector<double> w(n);
  double sum = 0.0;
  for (auto& x : w) {
    double u = rng.uniform();
    while (u <= 0.0) u = rng.uniform();
    x = -std::log(u);
    sum += x;
  }
  for (auto& x : w) x /= sum;
  return ProbabilityDistribution(std::move(w));
}

CircleMeasure random_circle_measure(std::size_t num_atoms, Rng& rng) {
  const ProbabilityDistribution w = random_distribution(num_atoms, rng);
  std::vector<CircleMeasure::Atom> atoms(num_atoms);
  for (std::size_t a = 0; a < num_atoms; ++a)
    atoms[a] = {w[a], rng.uniform()};
  return CircleMeasure(std::move(atoms));
}

}  // namespace qdeph
