#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace sysid {

/// A single rollout: states x_0..x_T (columns), the disturbances w_0..w_{T-1}
/// that produced them, and, for the sparse-attack regime, the per-step attack
/// flags. Immutable after construction by convention.
struct Trajectory {
  Eigen::MatrixXd states;        // n x (T+1), column t is x_t
  Eigen::MatrixXd disturbances;  // n x T, column t is w_t
  std::vector<std::uint8_t> attack_flags;  // length T when present, else empty

  int state_dim() const { return static_cast<int>(states.rows()); }
  long length() const { return disturbances.cols(); }  // T
  bool has_attack_flags() const { return !attack_flags.empty(); }

  /// Throws on inconsistent shapes (states must have exactly one more column
  /// than disturbances; flags, when present, must match the length).
  void validate() const;
};

/// First `T` steps of a trajectory (states 0..T, disturbances 0..T-1).
Trajectory prefix(const Trajectory& traj, long T);

/// CSV with header `t,x_0,...,x_{n-1},w_0,...,w_{n-1},attacked`. Row t carries
/// the disturbance that produced state t+1; the final row leaves the
/// disturbance and attack fields empty.
void save_trajectory_csv(const Trajectory& traj, const std::string& path);
Trajectory load_trajectory_csv(const std::string& path);

}  // namespace sysid
