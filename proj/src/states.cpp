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

#include "qdeph/states.hpp"

#include <cmath>
#include <utility>

namespace qdeph {

namespace {
constexpr double kBlockDrop = 1e-12;  // K-blocks below this norm get nu = 0
}

DensityMatrix DensityMatrix::from_matrix(const CMat& m) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw StateError("DensityMatrix: matrix is not square");
  if (!m.allFinite())
    throw StateError("DensityMatrix: matrix has non-finite entries");
  if (hermiticity_defect(m) > tol::kHermitian)
    throw StateError("DensityMatrix: matrix is not Hermitian");
  if (std::abs(m.trace().real() - 1.0) > tol::kUnitNorm ||
      std::abs(m.trace().imag()) > tol::kUnitNorm)
    throw StateError("DensityMatrix: trace is not 1");
  const EigenDecomposition dec = hermitian_eig(m);
  const double min_eig = dec.eigenvalues.minCoeff();
  if (min_eig < -tol::kZeroEig)
    throw StateError("DensityMatrix: negative eigenvalue " +
                     std::to_string(min_eig));
  if (min_eig >= 0.0) return DensityMatrix(m);
  // Clamp eigenvalues in [-1e-10, 0) and renormalize the trace.
  RVec w = dec.eigenvalues;
  for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = std::max(w(i), 0.0);
  CMat fixed = dec.eigenvectors * w.asDiagonal() * dec.eigenvectors.adjoint();
  fixed /= fixed.trace().real();
  return DensityMatrix(std::move(fixed));
}

DensityMatrix apply(const QuantumChannel& chan, const DensityMatrix& rho) {
  return DensityMatrix::from_matrix(chan.apply(rho.matrix()));
}

CorrelatedStateSpec::CorrelatedStateSpec(CMat coeff, std::vector<CVec> vectors)
    : coeff_(std::move(coeff)), vectors_(std::move(vectors)) {
  if (coeff_.rows() != coeff_.cols() || coeff_.rows() < 1)
    throw StateError("CorrelatedStateSpec: coefficient matrix not square");
  if (static_cast<Eigen::Index>(vectors_.size()) != coeff_.rows())
    throw DimensionError(
        "CorrelatedStateSpec: vector count must match coefficient dimension");
  if (hermiticity_defect(coeff_) > tol::kHermitian)
    throw StateError("CorrelatedStateSpec: coefficient matrix not Hermitian");
  if (!psd_check(coeff_, tol::kZeroEig))
    throw StateError("CorrelatedStateSpec: coefficient matrix not PSD");
  const double tr = coeff_.trace().real();
  if (std::abs(tr - 1.0) > tol::kUnitNorm)
    throw StateError("CorrelatedStateSpec: coefficient trace is not 1");
  coeff_ /= tr;
  const Eigen::Index dk = vectors_.front().size();
  for (auto& h : vectors_) {
    if (h.size() != dk)
      throw DimensionError("CorrelatedStateSpec: vectors have mixed lengths");
    const double norm = h.norm();
    if (std::abs(norm - 1.0) > tol::kUnitNorm)
      throw NormalizationError("CorrelatedStateSpec: vector is not unit norm");
    h /= norm;
  }
}

DensityMatrix correlated_state(const CorrelatedStateSpec& spec) {
  const Eigen::Index dh = spec.dim_h();
  const Eigen::Index dk = spec.dim_k();
  CMat m = CMat::Zero(dh * dk, dh * dk);
  for (Eigen::Index n = 0; n < dh; ++n)
    for (Eigen::Index mm = 0; mm < dh; ++mm)
      m.block(n * dk, mm * dk, dk, dk) =
          spec.coeff()(n, mm) * (spec.vectors()[static_cast<std::size_t>(n)] *
                                 spec.vectors()[static_cast<std::size_t>(mm)]
                                     .adjoint());
  return DensityMatrix::from_matrix(m);
}

DensityMatrix pure_correlated_state(const std::vector<Complex>& nu,
                                    const std::vector<CVec>& hs) {
  if (nu.empty() || nu.size() != hs.size())
    throw DimensionError(
        "pure_correlated_state: amplitude and vector counts differ");
  double total = 0.0;
  for (const auto& a : nu) total += std::norm(a);
  if (std::abs(total - 1.0) > tol::kUnitNorm)
    throw NormalizationError("pure_correlated_state: sum |nu|^2 = " +
                             std::to_string(total));
  const Eigen::Index dh = static_cast<Eigen::Index>(nu.size());
  const Eigen::Index dk = hs.front().size();
  CVec psi = CVec::Zero(dh * dk);
  for (Eigen::Index n = 0; n < dh; ++n) {
    const CVec& h = hs[static_cast<std::size_t>(n)];
    if (h.size() != dk)
      throw DimensionError("pure_correlated_state: vectors have mixed lengths");
    if (std::abs(h.norm() - 1.0) > tol::kUnitNorm)
      throw NormalizationError("pure_correlated_state: h is not unit norm");
    psi.segment(n * dk, dk) = nu[static_cast<std::size_t>(n)] * h;
  }
  psi /= psi.norm();
  return DensityMatrix::from_matrix(psi * psi.adjoint());
}

DensityMatrix dephase_then_correlate(const CorrelationMatrix& corr,
                                     const std::vector<Complex>& nu,
                                     const std::vector<CVec>& hs) {
  if (corr.dim() != static_cast<Eigen::Index>(nu.size()) ||
      nu.size() != hs.size())
    throw DimensionError("dephase_then_correlate: dimension mismatch");
  const Eigen::Index dh = corr.dim();
  CMat coeff(dh, dh);
  for (Eigen::Index n = 0; n < dh; ++n)
    for (Eigen::Index m = 0; m < dh; ++m)
      coeff(n, m) = corr.entries()(n, m) * nu[static_cast<std::size_t>(n)] *
                    std::conj(nu[static_cast<std::size_t>(m)]);
  return correlated_state(CorrelatedStateSpec(std::move(coeff), hs));
}

PureStateDecomposition decompose_pure(const CVec& e, Eigen::Index dim_h,
                                      Eigen::Index dim_k) {
  if (e.size() != dim_h * dim_k)
    throw DimensionError("decompose_pure: vector length is not dim_h*dim_k");
  if (std::abs(e.norm() - 1.0) > tol::kUnitNorm)
    throw NormalizationError("decompose_pure: input vector is not unit norm");
  PureStateDecomposition out;
  out.amplitudes.resize(static_cast<std::size_t>(dim_h));
  out.vectors.resize(static_cast<std::size_t>(dim_h));
  for (Eigen::Index n = 0; n < dim_h; ++n) {
    const CVec block = e.segment(n * dim_k, dim_k);
    const double norm = block.norm();
    if (norm > kBlockDrop) {
      out.amplitudes[static_cast<std::size_t>(n)] = norm;
      out.vectors[static_cast<std::size_t>(n)] = block / norm;
    } else {
      out.amplitudes[static_cast<std::size_t>(n)] = 0.0;
      out.vectors[static_cast<std::size_t>(n)] = CVec::Unit(dim_k, 0);
    }
  }
  return out;
}

CMat support_projection(const std::vector<CVec>& hs) {
  if (hs.empty()) throw DimensionError("support_projection: no vectors");
  const Eigen::Index dh = static_cast<Eigen::Index>(hs.size());
  const Eigen::Index dk = hs.front().size();
  CMat p = CMat::Zero(dh * dk, dh * dk);
  for (Eigen::Index n = 0; n < dh; ++n) {
    const CVec& h = hs[static_cast<std::size_t>(n)];
    if (h.size() != dk)
      throw DimensionError("support_projection: vectors have mixed lengths");
    if (std::abs(h.norm() - 1.0) > tol::kUnitNorm)
      throw NormalizationError("support_projection: h is not unit norm");
    const CVec hn = h / h.norm();
    p.block(n * dk, n * dk, dk, dk) = hn * hn.adjoint();
  }
  return p;
}

CorrelatedStateSpec random_correlated_spec(Eigen::Index dim_h,
                                           Eigen::Index dim_k, Rng& rng) {
  if (dim_h < 1 || dim_k < 1)
    throw DimensionError("random_correlated_spec: dims must be >= 1");
  CMat g(dim_h, dim_h);
  for (Eigen::Index i = 0; i < dim_h; ++i)
    for (Eigen::Index j = 0; j < dim_h; ++j) g(i, j) = rng.cnormal();
  CMat coeff = g.adjoint() * g;
  coeff /= coeff.trace().real();
  std::vector<CVec> hs;
  hs.reserve(static_cast<std::size_t>(dim_h));
  for (Eigen::Index n = 0; n < dim_h; ++n)
    hs.push_back(random_unit_vector(dim_k, rng));
  return CorrelatedStateSpec(std::move(coeff), std::move(hs));
}

CorrelatedStateSpec random_correlated_spec(Eigen::Index dim_h,
                                           Eigen::Index dim_k,
                                           std::uint64_t seed) {
  Rng rng(seed);
  return random_correlated_spec(dim_h, dim_k, rng);
}

DensityMatrix random_density_of_rank(Eigen::Index dim, Eigen::Index rank,
                                     Rng& rng) {
  if (dim < 1 || rank < 1 || rank > dim)
    throw DimensionError("random_density_of_rank: need 1 <= rank <= dim");
  CMat g(dim, rank);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < rank; ++j) g(i, j) = rng.cnormal();
  CMat m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix::from_matrix(m);
}

DensityMatrix random_density(Eigen::Index dim, Rng& rng) {
  return random_density_of_rank(dim, dim, rng);
}

DensityMatrix random_density(Eigen::Index dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(dim, rng);
}

}  // namespace qdeph
