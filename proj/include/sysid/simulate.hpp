#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "sysid/disturbance.hpp"
#include "sysid/model.hpp"
#include "sysid/rng.hpp"
#include "sysid/trajectory.hpp"

namespace sysid {

/// Any rollout whose state norm crosses this is treated as diverged.
inline constexpr double kDivergenceCutoff = 1e12;

/// Stability diagnostics: spectral norm of the coefficient matrix, a sampled
/// Lipschitz estimate for the feature map, and their product. The feature map
/// may have phi(0) != 0 (cosine terms); phi0_norm surfaces that instead of
/// rejecting such bases.
struct AssumptionReport {
  double rho = 0.0;            // ||a_bar||_2
  double lipschitz_est = 0.0;  // max sampled ||phi(x)-phi(y)|| / ||x-y||
  double rho_l = 0.0;          // rho * lipschitz_est
  bool stable = false;         // rho_l < 1
  double phi0_norm = 0.0;      // ||phi(0)||_2
};

/// Smallest eigenvalue of the averaged feature outer-product matrix over a
/// time subset.
struct ExcitationReport {
  double lambda_min_sq = 0.0;
  long subset_size = 0;
};

/// Roll the dynamics forward T steps under a disturbance spec, recording
/// states, disturbances, and attack flags (sparse-attack regime only).
/// Throws DivergenceError when a state norm exceeds the cutoff.
Trajectory simulate(const SystemModel& model, const DisturbanceSpec& spec,
                    const Eigen::Ref<const Eigen::VectorXd>& x0, long T, RngStream& rng);

/// Noise-free rollout x_{t+1} = a_hat * phi(x_t). Divergence is the expected
/// failure mode for bad estimates and throws DivergenceError.
Trajectory reconstruct(const Eigen::MatrixXd& a_hat, const BasisLibrary& basis,
                       const Eigen::Ref<const Eigen::VectorXd>& x0, long T);

/// Non-throwing rollout used where divergence is data rather than an error.
struct RolloutResult {
  Trajectory trajectory;  // states up to the last finite, in-range one
  bool diverged = false;
  long steps_completed = 0;  // number of transitions actually recorded
  double max_norm = 0.0;
};
RolloutResult rollout_noise_free(const Eigen::MatrixXd& a_hat, const BasisLibrary& basis,
                                 const Eigen::Ref<const Eigen::VectorXd>& x0, long T);

/// Spectral norm by power iteration on a_bar^T a_bar (relative tolerance
/// 1e-10, at most 10^4 iterations) plus a sampled Lipschitz estimate over the
/// hypercube [-half_width, half_width]^n. Consumes the rng: first the power
/// iteration start vector (m draws), then `samples` point pairs (2n draws
/// each), so the estimate over a prefix of pairs is reproducible.
AssumptionReport check_assumptions(const SystemModel& model, double sample_region_half_width,
                                   long samples, RngStream& rng);

/// Build M = (1/|subset|) * sum phi(x_t) phi(x_t)^T over the given time
/// indices (default: all t in [0, T-1]) and return its smallest eigenvalue.
/// The subset is canonicalized by sorting, so the result is independent of
/// the order indices are supplied in. Throws ValidationError on an empty
/// subset or out-of-range indices.
ExcitationReport empirical_excitation(const Trajectory& traj, const BasisLibrary& basis,
                                      const std::optional<std::vector<long>>& subset = std::nullopt);

}  // namespace sysid
