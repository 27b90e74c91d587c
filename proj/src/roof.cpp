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

#include "qdeph/roof.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <utility>

namespace qdeph {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kWeightDrop = 1e-14;       // members below this weight vanish
constexpr double kObjectiveFloor = 1e-12;   // entropy cannot go below zero
constexpr std::size_t kStagnationWindow = 50;  // rotations
constexpr double kStagnationImprove = 1e-9;
constexpr int kMaxRotations = 10000;
constexpr int kGoldenIterations = 24;

/// Spectral factor of the target: column i is sqrt(mu_i) u_i over the
/// support, so that sigma = B B' and every m-member decomposition is
/// {B row_j(W)'} for an isometry W.
CMat support_factor(const DensityMatrix& sigma) {
  const EigenDecomposition dec = hermitian_eig(sigma.matrix());
  Eigen::Index rank = 0;
  while (rank < dec.eigenvalues.size() &&
         dec.eigenvalues(rank) > tol::kSupport)
    ++rank;
  CMat b(sigma.dim(), rank);
  for (Eigen::Index i = 0; i < rank; ++i)
    b.col(i) = std::sqrt(dec.eigenvalues(i)) * dec.eigenvectors.col(i);
  return b;
}

/// Scratch space reused across the optimizer's many objective evaluations;
/// small dense temporaries and the iterative eigensolver otherwise dominate
/// the runtime through allocations.
struct RowWork {
  CVec f;
  CMat lifted;  // columns V_j f
  CMat gram;
  RVec ev;
  Eigen::SelfAdjointEigenSolver<CMat> solver;

  RowWork(Eigen::Index dim_in, Eigen::Index dim_out, Eigen::Index num_kraus)
      : f(dim_in),
        lifted(dim_out, num_kraus),
        gram(std::min(dim_out, num_kraus), std::min(dim_out, num_kraus)),
        ev(std::min(dim_out, num_kraus)) {}
};

/// Eigenvalues of a small Hermitian matrix into work.ev: closed forms for
/// dimensions one and two, the iterative solver above that.
void small_hermitian_eigenvalues(const CMat& m, RowWork& work) {
  const Eigen::Index d = m.rows();
  work.ev.resize(d);
  if (d == 1) {
    work.ev(0) = m(0, 0).real();
    return;
  }
  if (d == 2) {
    const double a = m(0, 0).real();
    const double b = m(1, 1).real();
    const double half_diff = 0.5 * (a - b);
    const double r = std::sqrt(half_diff * half_diff + std::norm(m(0, 1)));
    const double mean = 0.5 * (a + b);
    work.ev(0) = mean - r;
    work.ev(1) = mean + r;
    return;
  }
  work.solver.compute(m, Eigen::EigenvaluesOnly);
  work.ev = work.solver.eigenvalues();
}

/// Weighted output entropy of the member encoded by one isometry row:
/// p * S(omega(f f') / p) for f = B row', p = |f|^2. The output's nonzero
/// spectrum equals that of the Gram matrix of the lifted columns {V_j f},
/// so the eigenproblem has dimension min(dim_out, num_kraus).
double row_value(const CMat& b, const QuantumChannel& omega,
                 const Eigen::RowVectorXcd& row, RowWork& work) {
  work.f.noalias() = b * row.adjoint();
  const double p = work.f.squaredNorm();
  if (p < kWeightDrop) return 0.0;
  const auto& kraus = omega.kraus();
  const Eigen::Index num_kraus = static_cast<Eigen::Index>(kraus.size());
  const Eigen::Index dout = omega.dim_out();
  for (Eigen::Index j = 0; j < num_kraus; ++j)
    work.lifted.col(j).noalias() =
        kraus[static_cast<std::size_t>(j)] * work.f;
  if (num_kraus < dout) {
    work.gram.noalias() = work.lifted.adjoint() * work.lifted;
  } else {
    work.gram.noalias() = work.lifted * work.lifted.adjoint();
  }
  small_hermitian_eigenvalues(work.gram, work);
  double s = 0.0;
  for (Eigen::Index i = 0; i < work.ev.size(); ++i) {
    const double q = work.ev(i) / p;
    if (q > tol::kSupport) s -= q * std::log(q);
  }
  return p * s;
}

struct SearchState {
  CMat w;          // m x r isometry
  RVec row_vals;   // per-row objective contributions
  double total;    // sum of row_vals
};

SearchState evaluate_all(const CMat& w, const CMat& b,
                         const QuantumChannel& omega, RowWork& work) {
  SearchState st;
  st.w = w;
  st.row_vals.resize(w.rows());
  st.total = 0.0;
  for (Eigen::Index j = 0; j < w.rows(); ++j) {
    st.row_vals(j) = row_value(b, omega, st.w.row(j), work);
    st.total += st.row_vals(j);
  }
  return st;
}

/// Objective restricted to the Givens rotation of rows (i, j) with phase
/// psi: only those two rows move, so only their contributions change.
double pair_value(const CMat& b, const QuantumChannel& omega,
                  const Eigen::RowVectorXcd& wi, const Eigen::RowVectorXcd& wj,
                  double psi, double theta, RowWork& work) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Complex phase(std::cos(psi), std::sin(psi));
  const Eigen::RowVectorXcd ni = c * wi + s * phase * wj;
  const Eigen::RowVectorXcd nj = -s * std::conj(phase) * wi + c * wj;
  return row_value(b, omega, ni, work) + row_value(b, omega, nj, work);
}

struct RotationResult {
  double theta;
  double value;
};

/// Coarse grid over (-pi/2, pi/2] plus small probes around zero, followed
/// by golden-section refinement of the best bracket. theta = 0 is the
/// current point; when no candidate beats it meaningfully the slice is
/// treated as already minimized, which keeps stagnant sweeps cheap.
RotationResult minimize_rotation(const CMat& b, const QuantumChannel& omega,
                                 const Eigen::RowVectorXcd& wi,
                                 const Eigen::RowVectorXcd& wj, double psi,
                                 double current, RowWork& work) {
  constexpr int kGrid = 6;
  constexpr double kProbe = 1e-3;
  RotationResult best{0.0, current};
  const double spacing = kPi / kGrid;
  for (int k = 0; k < kGrid; ++k) {
    const double theta = -kPi / 2 + spacing * (k + 0.5);
    const double val = pair_value(b, omega, wi, wj, psi, theta, work);
    if (val < best.value) best = {theta, val};
  }
  for (double theta : {-kProbe, kProbe}) {
    const double val = pair_value(b, omega, wi, wj, psi, theta, work);
    if (val < best.value) best = {theta, val};
  }
  if (best.value >= current - 1e-11) return {0.0, current};
  double lo = best.theta - spacing;
  double hi = best.theta + spacing;
  const double inv_phi = 0.6180339887498949;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = pair_value(b, omega, wi, wj, psi, x1, work);
  double f2 = pair_value(b, omega, wi, wj, psi, x2, work);
  for (int it = 0; it < kGoldenIterations; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = pair_value(b, omega, wi, wj, psi, x1, work);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = pair_value(b, omega, wi, wj, psi, x2, work);
    }
  }
  const double xm = 0.5 * (lo + hi);
  const double fm = pair_value(b, omega, wi, wj, psi, xm, work);
  if (fm < best.value) best = {xm, fm};
  if (f1 < best.value) best = {x1, f1};
  if (f2 < best.value) best = {x2, f2};
  return best;
}

struct DescentResult {
  SearchState state;
  bool converged;
};

/// Pairwise-rotation descent: sweeps over row pairs and the two phase
/// directions, accepting the 1-D minimizer of each slice. Stops when the
/// cumulative improvement over the trailing window falls below the
/// stagnation threshold or the rotation budget is exhausted.
DescentResult descend(SearchState st, const CMat& b,
                      const QuantumChannel& omega, RowWork& work) {
  const Eigen::Index m = st.w.rows();
  std::deque<double> window;
  double window_sum = 0.0;
  int rotations = 0;
  bool converged = false;
  while (rotations < kMaxRotations) {
    if (st.total <= kObjectiveFloor) {
      converged = true;
      break;
    }
    bool stop = false;
    for (Eigen::Index i = 0; i < m && !stop; ++i) {
      for (Eigen::Index j = i + 1; j < m && !stop; ++j) {
        for (double psi : {0.0, kPi / 2}) {
          const double current = st.row_vals(i) + st.row_vals(j);
          const RotationResult rot = minimize_rotation(
              b, omega, st.w.row(i), st.w.row(j), psi, current, work);
          double improvement = 0.0;
          if (rot.value < current - 1e-12) {
            const double c = std::cos(rot.theta);
            const double s = std::sin(rot.theta);
            const Complex phase(std::cos(psi), std::sin(psi));
            const Eigen::RowVectorXcd wi = st.w.row(i);
            const Eigen::RowVectorXcd wj = st.w.row(j);
            st.w.row(i) = c * wi + s * phase * wj;
            st.w.row(j) = -s * std::conj(phase) * wi + c * wj;
            st.row_vals(i) = row_value(b, omega, st.w.row(i), work);
            st.row_vals(j) = row_value(b, omega, st.w.row(j), work);
            const double new_total = st.row_vals.sum();
            improvement = st.total - new_total;
            st.total = new_total;
          }
          ++rotations;
          window.push_back(improvement);
          window_sum += improvement;
          if (window.size() > kStagnationWindow) {
            window_sum -= window.front();
            window.pop_front();
          }
          if (window.size() >= kStagnationWindow &&
              window_sum < kStagnationImprove) {
            converged = true;
            stop = true;
            break;
          }
          if (rotations >= kMaxRotations) {
            stop = true;
            break;
          }
        }
      }
    }
    if (stop) break;
  }
  return {std::move(st), converged};
}

}  // namespace

CMat ensemble_average(const Ensemble& ens) {
  if (ens.members.empty()) throw DimensionError("ensemble_average: empty");
  const Eigen::Index d = ens.members.front().size();
  CMat acc = CMat::Zero(d, d);
  for (std::size_t j = 0; j < ens.members.size(); ++j)
    acc += ens.weights[j] * (ens.members[j] * ens.members[j].adjoint());
  return acc;
}

double ensemble_objective(const Ensemble& ens, const QuantumChannel& omega) {
  if (ens.weights.size() != ens.members.size() || ens.members.empty())
    throw DimensionError("ensemble_objective: malformed ensemble");
  double acc = 0.0;
  for (std::size_t j = 0; j < ens.members.size(); ++j) {
    const CVec& f = ens.members[j];
    if (f.size() != omega.dim_in())
      throw DimensionError("ensemble_objective: member dimension mismatch");
    acc += ens.weights[j] * entropy_of_output(omega.apply(f * f.adjoint()));
  }
  return acc;
}

Ensemble hjw_ensemble(const DensityMatrix& sigma, const CMat& mix) {
  const CMat b = support_factor(sigma);
  const Eigen::Index rank = b.cols();
  if (mix.cols() != rank || mix.rows() < rank)
    throw IsometryError("hjw_ensemble: mix must be m x rank with m >= rank");
  if (max_abs(mix.adjoint() * mix - CMat::Identity(rank, rank)) > 1e-8)
    throw IsometryError("hjw_ensemble: columns are not orthonormal");
  Ensemble ens;
  double total = 0.0;
  for (Eigen::Index j = 0; j < mix.rows(); ++j) {
    const CVec f = b * mix.row(j).adjoint();
    const double p = f.squaredNorm();
    if (p <= kWeightDrop) continue;
    ens.weights.push_back(p);
    ens.members.push_back(f / std::sqrt(p));
    total += p;
  }
  for (auto& p : ens.weights) p /= total;
  return ens;
}

RoofEstimate roof_upper_bound(const DensityMatrix& sigma,
                              const QuantumChannel& omega, int members,
                              int restarts, std::uint64_t seed) {
  if (omega.dim_in() != sigma.dim())
    throw DimensionError("roof_upper_bound: channel and state dims differ");
  if (restarts < 1)
    throw ConfigError("roof_upper_bound: restarts must be >= 1");
  const CMat b = support_factor(sigma);
  const Eigen::Index rank = b.cols();
  const Eigen::Index m =
      members == 0 ? rank * rank : static_cast<Eigen::Index>(members);
  if (m < rank)
    throw ConfigError("roof_upper_bound: ensemble size below rank");

  RowWork work(sigma.dim(), omega.dim_out(),
               static_cast<Eigen::Index>(omega.kraus().size()));

  // The eigen-ensemble is the baseline: any estimate must not exceed it.
  CMat eigen_mix = CMat::Zero(m, rank);
  eigen_mix.topRows(rank) = CMat::Identity(rank, rank);
  const SearchState eigen_state = evaluate_all(eigen_mix, b, omega, work);

  double best_value = eigen_state.total;
  CMat best_w = eigen_state.w;
  bool best_converged = true;  // a plain evaluation, nothing to converge

  for (int k = 0; k < restarts; ++k) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(k)));
    const CMat start = random_isometry(m, rank, rng);
    DescentResult res =
        descend(evaluate_all(start, b, omega, work), b, omega, work);
    if (res.state.total < best_value) {
      best_value = res.state.total;
      best_w = res.state.w;
      best_converged = res.converged;
    }
  }

  RoofEstimate est;
  est.value = best_value;
  est.best = hjw_ensemble(sigma, best_w);
  est.restarts_used = restarts;
  est.converged = best_converged;
  return est;
}

Corollary1Report check_corollary1(const CorrelatedStateSpec& spec,
                                  const QuantumChannel& omega, int members,
                                  int restarts, std::uint64_t seed,
                                  double gain_tol, double roof_tol) {
  const DensityMatrix rho = correlated_state(spec);
  const QuantumChannel big = tensor(identity_channel(spec.dim_h()), omega);
  Corollary1Report rep;
  rep.gain = entropy_of_output(big.apply(rho.matrix())) - von_neumann(rho);
  rep.ensemble_bound = 0.0;
  for (Eigen::Index n = 0; n < spec.dim_h(); ++n) {
    const CVec& h = spec.vectors()[static_cast<std::size_t>(n)];
    rep.ensemble_bound += spec.coeff()(n, n).real() *
                          entropy_of_output(omega.apply(h * h.adjoint()));
  }
  const DensityMatrix marginal = DensityMatrix::from_matrix(
      partial_trace(rho.matrix(), spec.dim_h(), spec.dim_k(), Subsystem::K));
  rep.roof = roof_upper_bound(marginal, omega, members, restarts, seed);
  rep.gain_vs_ensemble =
      make_certificate(rep.gain, rep.ensemble_bound, gain_tol);
  rep.roof_vs_ensemble =
      make_certificate(rep.ensemble_bound, rep.roof.value, roof_tol);
  rep.conjecture_margin = rep.gain - rep.roof.value;
  return rep;
}

ConjectureProbe probe_conjecture(const DensityMatrix& rho, Eigen::Index dim_h,
                                 Eigen::Index dim_k,
                                 const QuantumChannel& omega, int members,
                                 int restarts, std::uint64_t seed,
                                 double tolerance) {
  if (rho.dim() != dim_h * dim_k)
    throw DimensionError("probe_conjecture: state is not dim_h x dim_k");
  if (omega.dim_in() != dim_k)
    throw DimensionError("probe_conjecture: channel does not act on K");
  ConjectureProbe probe;
  const QuantumChannel big = tensor(identity_channel(dim_h), omega);
  probe.gain = entropy_of_output(big.apply(rho.matrix())) - von_neumann(rho);
  const DensityMatrix marginal = DensityMatrix::from_matrix(
      partial_trace(rho.matrix(), dim_h, dim_k, Subsystem::K));
  probe.roof = roof_upper_bound(marginal, omega, members, restarts, seed);
  probe.verdict = probe.gain >= probe.roof.value - tolerance
                      ? ConjectureVerdict::kSupported
                      : ConjectureVerdict::kInconclusive;
  return probe;
}

}  // namespace qdeph
