#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>

#include "sysid/basis.hpp"

namespace sysid {

/// Dynamics x_{t+1} = a_bar * phi(x_t) + w_t with a known feature map and an
/// unknown (to the estimators) coefficient matrix.
struct SystemModel {
  Eigen::MatrixXd a_bar;  // n x m
  BasisLibrary basis;

  int state_dim() const { return basis.state_dim; }
  int feature_dim() const { return basis.output_dim(); }

  /// Throws on dimension mismatch between a_bar and the basis, or on
  /// non-finite entries.
  void validate() const;
};

/// The 3-state benchmark system: an 11-term library
/// [x1, x2, x3, x1*x2, x2*x3, x3*x1, x1^2, x2^2, x3^2, sin(x1*x2), cos(x3)]
/// with a sparse 3x11 coefficient matrix.
SystemModel paper_system();

/// Flat text model format: `state_dim`, `terms` with one term per line, and
/// `a_bar` rows as space-separated shortest round-trip decimals.
void save_model(const SystemModel& model, const std::string& path);
SystemModel load_model(const std::string& path);

void write_model(const SystemModel& model, std::ostream& out);
SystemModel read_model(std::istream& in);

/// Just the coefficient block: n lines of m space-separated decimals.
void save_matrix(const Eigen::MatrixXd& a, const std::string& path);

}  // namespace sysid
