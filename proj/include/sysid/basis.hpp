#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace sysid {

/// One coordinate of the feature map. The closed descriptor set keeps models
/// serializable and trajectories reproducible; extending the map means adding
/// a kind here, in eval_basis, and in the text format.
struct BasisTerm {
  enum class Kind { Linear, Cross, Square, SinProd, Cos };

  Kind kind = Kind::Linear;
  int i = 0;  // first state index
  int j = 0;  // second state index (Cross, SinProd)

  static BasisTerm linear(int i) { return {Kind::Linear, i, 0}; }
  static BasisTerm cross(int i, int j) { return {Kind::Cross, i, j}; }
  static BasisTerm square(int i) { return {Kind::Square, i, 0}; }
  static BasisTerm sin_prod(int i, int j) { return {Kind::SinProd, i, j}; }
  static BasisTerm cos(int i) { return {Kind::Cos, i, 0}; }
};

/// Ordered feature map phi: R^n -> R^m. Term order is the output coordinate
/// order.
struct BasisLibrary {
  int state_dim = 0;
  std::vector<BasisTerm> terms;

  int output_dim() const { return static_cast<int>(terms.size()); }

  /// Throws ValidationError if any index is out of range or a Cross term
  /// repeats an index.
  void validate() const;
};

/// Identity feature map (m = n, terms Linear(0..n-1)).
BasisLibrary linear_library(int n);

/// Evaluate the feature map at x. Throws DimensionError on size mismatch and
/// ValidationError on non-finite input.
Eigen::VectorXd eval_basis(const BasisLibrary& basis, const Eigen::Ref<const Eigen::VectorXd>& x);

/// Text form used by the model file, e.g. "cross 0 1".
std::string term_to_string(const BasisTerm& term);

/// Inverse of term_to_string; throws ValidationError on unknown kind or arity.
BasisTerm term_from_tokens(const std::vector<std::string_view>& tokens);

}  // namespace sysid
