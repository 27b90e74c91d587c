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

#include "qdeph/channels.hpp"
#include "qdeph/states.hpp"

namespace qdeph {

/// Verification record for one inequality instance: pass iff
/// margin = lhs - rhs >= -tolerance. Values are in nats.
struct GainCertificate {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

inline GainCertificate make_certificate(double lhs, double rhs,
                                        double tolerance) {
  GainCertificate c;
  c.lhs = lhs;
  c.rhs = rhs;
  c.margin = lhs - rhs;
  c.tolerance = tolerance;
  c.pass = c.margin >= -tolerance;
  return c;
}

/// Shannon entropy of a nonnegative sequence in nats; entries at or below
/// the support threshold are excluded from the log.
double entropy_of_weights(const RVec& w);

/// S(rho) = -Tr(rho log rho) in nats, from the eigenvalues.
double von_neumann(const DensityMatrix& rho);

/// Entropy of a raw Hermitian PSD matrix (no state validation); used on
/// channel outputs that are density matrices by construction.
double entropy_of_output(const CMat& m);

/// S(rho||sigma) = Tr(rho (log rho - log sigma)); +infinity when the
/// support of rho is not contained in the support of sigma.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// S(chan(rho)) - S(rho); may be negative for general channels.
double entropy_gain(const QuantumChannel& chan, const DensityMatrix& rho);

/// Sum over the support of `a` of log(a-eigenvalue) times the matched
/// expectation in rho: Tr(rho log a) restricted to eigenvalues above the
/// support threshold.
double trace_log_on_support(const CMat& rho, const CMat& a);

/// Entropy gain against -Tr(rho log chan(I)). The bound's nonnegativity is
/// a theorem only when chan(I) <= I; for other channels only lhs >= rhs is
/// certified. Throws SupportError when rho has mass outside supp chan(I).
GainCertificate holevo_gain_bound(const QuantumChannel& chan,
                                  const DensityMatrix& rho,
                                  double tolerance = tol::kInequality);

/// Entropy gain against -Tr(chan(rho) log chan(P)) for an orthogonal
/// projection P with P rho = rho P = rho (checked within 1e-9; SupportError
/// otherwise). The log is taken on the support of chan(P).
GainCertificate projection_gain_bound(const QuantumChannel& chan,
                                      const DensityMatrix& rho, const CMat& p,
                                      double tolerance = tol::kInequality);

/// S(rho) + sum_n coeff(n,n) S(omega(|h_n><h_n|)) for the correlated state
/// of the spec.
double theorem1_rhs(const CorrelatedStateSpec& spec,
                    const QuantumChannel& omega);

/// Certifies S((Id (x) omega)(rho)) >= theorem1_rhs(spec, omega).
GainCertificate check_theorem1(const CorrelatedStateSpec& spec,
                               const QuantumChannel& omega,
                               double tolerance = tol::kInequality);

/// Certifies S((Phi (x) omega)(|e><e|)) >= S((Phi (x) Id)(|e><e|))
///   + sum_n |nu_n|^2 S(omega(|h_n><h_n|)) for the dephasing channel Phi
/// with the given kernel.
GainCertificate check_corollary2(const CorrelationMatrix& corr,
                                 const std::vector<Complex>& nu,
                                 const std::vector<CVec>& hs,
                                 const QuantumChannel& omega,
                                 double tolerance = tol::kInequality);

}  // namespace qdeph
