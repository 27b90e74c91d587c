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

#include "qdeph/entropy.hpp"

#include <cmath>
#include <limits>

namespace qdeph {

double entropy_of_weights(const RVec& w) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (w(i) > tol::kSupport) s -= w(i) * std::log(w(i));
  return s;
}

double von_neumann(const DensityMatrix& rho) {
  return entropy_of_weights(hermitian_eigenvalues(rho.matrix()));
}

double entropy_of_output(const CMat& m) {
  return entropy_of_weights(hermitian_eigenvalues(m));
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim())
    throw DimensionError("relative_entropy: state dimensions differ");
  const EigenDecomposition dec = hermitian_eig(sigma.matrix());
  double mass_outside = 0.0;
  double tr_rho_log_sigma = 0.0;
  for (Eigen::Index k = 0; k < dec.eigenvalues.size(); ++k) {
    const double s = dec.eigenvalues(k);
    const CVec v = dec.eigenvectors.col(k);
    const double expect = std::real(v.dot(rho.matrix() * v));
    if (s > tol::kSupport)
      tr_rho_log_sigma += expect * std::log(s);
    else
      mass_outside += expect;
  }
  if (mass_outside > tol::kZeroEig)
    return std::numeric_limits<double>::infinity();
  return -von_neumann(rho) - tr_rho_log_sigma;
}

double entropy_gain(const QuantumChannel& chan, const DensityMatrix& rho) {
  if (chan.dim_in() != rho.dim())
    throw DimensionError("entropy_gain: channel and state dimensions differ");
  return entropy_of_output(chan.apply(rho.matrix())) - von_neumann(rho);
}

double trace_log_on_support(const CMat& rho, const CMat& a) {
  const EigenDecomposition dec = hermitian_eig(a);
  double acc = 0.0;
  for (Eigen::Index k = 0; k < dec.eigenvalues.size(); ++k) {
    const double s = dec.eigenvalues(k);
    if (s <= tol::kSupport) continue;
    const CVec v = dec.eigenvectors.col(k);
    acc += std::real(v.dot(rho * v)) * std::log(s);
  }
  return acc;
}

GainCertificate holevo_gain_bound(const QuantumChannel& chan,
                                  const DensityMatrix& rho, double tolerance) {
  if (chan.dim_in() != rho.dim())
    throw DimensionError("holevo_gain_bound: dimensions differ");
  if (chan.dim_in() != chan.dim_out())
    throw DimensionError("holevo_gain_bound: channel must be square");
  const CMat omega_id = chan.apply_identity();
  const EigenDecomposition dec = hermitian_eig(omega_id);
  double mass_outside = 0.0;
  for (Eigen::Index k = 0; k < dec.eigenvalues.size(); ++k) {
    if (dec.eigenvalues(k) > tol::kSupport) continue;
    const CVec v = dec.eigenvectors.col(k);
    mass_outside += std::real(v.dot(rho.matrix() * v));
  }
  if (mass_outside > 1e-9)
    throw SupportError(
        "holevo_gain_bound: rho has support outside supp chan(I)");
  const double lhs = entropy_gain(chan, rho);
  const double rhs = -trace_log_on_support(rho.matrix(), omega_id);
  return make_certificate(lhs, rhs, tolerance);
}

GainCertificate projection_gain_bound(const QuantumChannel& chan,
                                      const DensityMatrix& rho, const CMat& p,
                                      double tolerance) {
  if (chan.dim_in() != rho.dim() || p.rows() != rho.dim() ||
      p.cols() != rho.dim())
    throw DimensionError("projection_gain_bound: dimensions differ");
  if (max_abs(p * rho.matrix() - rho.matrix()) > 1e-9 ||
      max_abs(rho.matrix() * p - rho.matrix()) > 1e-9)
    throw SupportError(
        "projection_gain_bound: P rho = rho P = rho does not hold");
  const CMat omega_rho = chan.apply(rho.matrix());
  const CMat omega_p = chan.apply(p);
  const double lhs = entropy_gain(chan, rho);
  const double rhs = -trace_log_on_support(omega_rho, omega_p);
  return make_certificate(lhs, rhs, tolerance);
}

double theorem1_rhs(const CorrelatedStateSpec& spec,
                    const QuantumChannel& omega) {
  if (omega.dim_in() != spec.dim_k())
    throw DimensionError("theorem1_rhs: channel does not act on K");
  double acc = von_neumann(correlated_state(spec));
  for (Eigen::Index n = 0; n < spec.dim_h(); ++n) {
    const CVec& h = spec.vectors()[static_cast<std::size_t>(n)];
    acc += spec.coeff()(n, n).real() *
           entropy_of_output(omega.apply(h * h.adjoint()));
  }
  return acc;
}

GainCertificate check_theorem1(const CorrelatedStateSpec& spec,
                               const QuantumChannel& omega, double tolerance) {
  const DensityMatrix rho = correlated_state(spec);
  const QuantumChannel big = tensor(identity_channel(spec.dim_h()), omega);
  const double lhs = entropy_of_output(big.apply(rho.matrix()));
  const double rhs = theorem1_rhs(spec, omega);
  return make_certificate(lhs, rhs, tolerance);
}

GainCertificate check_corollary2(const CorrelationMatrix& corr,
                                 const std::vector<Complex>& nu,
                                 const std::vector<CVec>& hs,
                                 const QuantumChannel& omega,
                                 double tolerance) {
  if (corr.dim() != static_cast<Eigen::Index>(nu.size()) ||
      nu.size() != hs.size())
    throw DimensionError("check_corollary2: dimension mismatch");
  if (omega.dim_in() != hs.front().size())
    throw DimensionError("check_corollary2: channel does not act on K");
  const DensityMatrix pure = pure_correlated_state(nu, hs);
  const QuantumChannel both = tensor(dephasing_channel(corr), omega);
  const double lhs = entropy_of_output(both.apply(pure.matrix()));
  double rhs = von_neumann(dephase_then_correlate(corr, nu, hs));
  for (std::size_t n = 0; n < nu.size(); ++n) {
    const CVec& h = hs[n];
    rhs += std::norm(nu[n]) * entropy_of_output(omega.apply(h * h.adjoint()));
  }
  return make_certificate(lhs, rhs, tolerance);
}

}  // namespace qdeph
