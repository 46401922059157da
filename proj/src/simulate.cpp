#include "sysid/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sysid/errors.hpp"

namespace sysid {

Trajectory simulate(const SystemModel& model, const DisturbanceSpec& spec,
                    const Eigen::Ref<const Eigen::VectorXd>& x0, long T, RngStream& rng) {
  model.validate();
  spec.validate(model.state_dim());
  if (T < 1) throw ValidationError("simulate: T must be at least 1");
  if (x0.size() != model.state_dim())
    throw DimensionError("simulate: x0 has dimension " + std::to_string(x0.size()) +
                         ", model expects " + std::to_string(model.state_dim()));
  if (!x0.allFinite()) throw ValidationError("simulate: non-finite x0");

  const int n = model.state_dim();
  const bool track_flags = spec.regime == DisturbanceSpec::Regime::SparseAttack;

  Trajectory traj;
  traj.states.resize(n, T + 1);
  traj.disturbances.resize(n, T);
  if (track_flags) traj.attack_flags.assign(static_cast<std::size_t>(T), 0);

  traj.states.col(0) = x0;
  for (long t = 0; t < T; ++t) {
    const Eigen::VectorXd x_t = traj.states.col(t);
    DisturbanceDraw draw = draw_disturbance(spec, x_t, rng);
    traj.states.col(t + 1) = model.a_bar * eval_basis(model.basis, x_t) + draw.w;
    traj.disturbances.col(t) = draw.w;
    if (track_flags) traj.attack_flags[static_cast<std::size_t>(t)] = draw.attacked ? 1 : 0;
    const double norm = traj.states.col(t + 1).norm();
    if (!(norm <= kDivergenceCutoff)) throw DivergenceError(t + 1, norm);
  }
  return traj;
}

RolloutResult rollout_noise_free(const Eigen::MatrixXd& a_hat, const BasisLibrary& basis,
                                 const Eigen::Ref<const Eigen::VectorXd>& x0, long T) {
  basis.validate();
  if (T < 1) throw ValidationError("rollout: T must be at least 1");
  if (a_hat.rows() != basis.state_dim || a_hat.cols() != basis.output_dim())
    throw DimensionError("rollout: coefficient matrix is " + std::to_string(a_hat.rows()) + "x" +
                         std::to_string(a_hat.cols()) + ", basis expects " +
                         std::to_string(basis.state_dim) + "x" + std::to_string(basis.output_dim()));
  if (x0.size() != basis.state_dim) throw DimensionError("rollout: x0 dimension mismatch");
  if (!x0.allFinite()) throw ValidationError("rollout: non-finite x0");

  const int n = basis.state_dim;
  RolloutResult res;
  Eigen::MatrixXd states(n, T + 1);
  states.col(0) = x0;
  res.max_norm = x0.norm();
  long t = 0;
  for (; t < T; ++t) {
    const Eigen::VectorXd x_t = states.col(t);
    Eigen::VectorXd next = a_hat * eval_basis(basis, x_t);
    const double norm = next.norm();
    if (!(norm <= kDivergenceCutoff)) {  // also catches NaN
      res.diverged = true;
      break;
    }
    states.col(t + 1) = next;
    res.max_norm = std::max(res.max_norm, norm);
  }
  res.steps_completed = t;
  res.trajectory.states = states.leftCols(t + 1);
  res.trajectory.disturbances = Eigen::MatrixXd::Zero(n, t);
  return res;
}

Trajectory reconstruct(const Eigen::MatrixXd& a_hat, const BasisLibrary& basis,
                       const Eigen::Ref<const Eigen::VectorXd>& x0, long T) {
  RolloutResult res = rollout_noise_free(a_hat, basis, x0, T);
  if (res.diverged)
    throw DivergenceError(res.steps_completed + 1,
                          std::numeric_limits<double>::infinity());
  return std::move(res.trajectory);
}

AssumptionReport check_assumptions(const SystemModel& model, double sample_region_half_width,
                                   long samples, RngStream& rng) {
  model.validate();
  if (samples < 2) throw ValidationError("check_assumptions: need at least 2 samples");
  if (!(sample_region_half_width > 0))
    throw ValidationError("check_assumptions: half-width must be positive");

  AssumptionReport rep;

  // Spectral norm via power iteration on the m x m Gram matrix a_bar^T a_bar.
  const Eigen::MatrixXd gram = model.a_bar.transpose() * model.a_bar;
  const Eigen::Index m = gram.rows();
  Eigen::VectorXd v(m);
  for (Eigen::Index k = 0; k < m; ++k) v[k] = rng.uniform(-1.0, 1.0);
  if (v.norm() == 0.0) v.setOnes();
  v.normalize();
  double eig = 0.0;
  const double rel_tol = 1e-10;
  for (int iter = 0; iter < 10000; ++iter) {
    Eigen::VectorXd gv = gram * v;
    const double next = v.dot(gv);
    const double norm = gv.norm();
    if (norm == 0.0) {
      eig = 0.0;
      break;
    }
    v = gv / norm;
    if (iter > 0 && std::abs(next - eig) <= rel_tol * std::max(std::abs(next), 1e-300)) {
      eig = next;
      break;
    }
    eig = next;
  }
  rep.rho = std::sqrt(std::max(eig, 0.0));

  // Lipschitz constant of phi estimated as the max difference quotient over
  // sampled pairs in the hypercube. Supremum estimate: monotone in `samples`.
  const int n = model.state_dim();
  const double hw = sample_region_half_width;
  double lip = 0.0;
  Eigen::VectorXd x(n), y(n);
  for (long s = 0; s < samples; ++s) {
    for (int i = 0; i < n; ++i) x[i] = rng.uniform(-hw, hw);
    for (int i = 0; i < n; ++i) y[i] = rng.uniform(-hw, hw);
    const double dx = (x - y).norm();
    if (dx == 0.0) continue;
    const double dphi = (eval_basis(model.basis, x) - eval_basis(model.basis, y)).norm();
    lip = std::max(lip, dphi / dx);
  }
  rep.lipschitz_est = lip;
  rep.rho_l = rep.rho * rep.lipschitz_est;
  rep.stable = rep.rho_l < 1.0;
  rep.phi0_norm = eval_basis(model.basis, Eigen::VectorXd::Zero(n)).norm();
  return rep;
}

ExcitationReport empirical_excitation(const Trajectory& traj, const BasisLibrary& basis,
                                      const std::optional<std::vector<long>>& subset) {
  traj.validate();
  basis.validate();
  if (traj.state_dim() != basis.state_dim)
    throw DimensionError("empirical_excitation: state dim mismatch");

  std::vector<long> idx;
  if (subset) {
    idx = *subset;
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    for (long t : idx)
      if (t < 0 || t >= traj.length())
        throw ValidationError("empirical_excitation: index " + std::to_string(t) +
                              " outside [0, " + std::to_string(traj.length() - 1) + "]");
  } else {
    idx.resize(static_cast<std::size_t>(traj.length()));
    for (long t = 0; t < traj.length(); ++t) idx[static_cast<std::size_t>(t)] = t;
  }
  if (idx.empty()) throw ValidationError("empirical_excitation: empty subset");

  const int m = basis.output_dim();
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(m, m);
  for (long t : idx) {
    const Eigen::VectorXd phi = eval_basis(basis, traj.states.col(t));
    acc.selfadjointView<Eigen::Lower>().rankUpdate(phi);
  }
  acc = acc.selfadjointView<Eigen::Lower>();
  acc /= static_cast<double>(idx.size());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(acc, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw ValidationError("empirical_excitation: eigen-solve failed");

  ExcitationReport rep;
  rep.lambda_min_sq = solver.eigenvalues()[0];
  rep.subset_size = static_cast<long>(idx.size());
  return rep;
}

}  // namespace sysid
