#pragma once

#include <Eigen/Dense>

#include "sysid/rng.hpp"

namespace sysid {

/// Zero-mean, coordinate-wise symmetric noise present at every step.
struct NoiseLaw {
  enum class Kind { UniformSym, GaussianIso };

  Kind kind = Kind::UniformSym;
  double half_width = 0.0;  // UniformSym: i.i.d. coordinates on [-half_width, half_width]
  double sigma = 0.0;       // GaussianIso: i.i.d. coordinates N(0, sigma^2)

  static NoiseLaw uniform_sym(double a);
  static NoiseLaw gaussian_iso(double sigma);
  void validate() const;
};

/// Sparse attack: at each step, with probability p, every coordinate is drawn
/// from the value rule; otherwise the disturbance is exactly zero.
struct AttackLaw {
  enum class ValueRule { StateDependentUniform, ConstantBias };

  double p = 0.0;  // attack probability, must stay below 0.5
  ValueRule rule = ValueRule::StateDependentUniform;

  // StateDependentUniform: coordinates uniform on
  // [c - min(||x||_2, cap), c + min(||x||_2, cap)].
  // c = 0.2, cap = 1 is the benchmark attack.
  double c = 0.0;
  double cap = 0.0;

  Eigen::VectorXd bias;  // ConstantBias: the disturbance is exactly this vector

  static AttackLaw state_dependent_uniform(double p, double c, double cap);
  static AttackLaw constant_bias(double p, Eigen::VectorXd bias);
  void validate() const;
};

/// Tagged disturbance regime; fully determines the conditional law of w_t
/// given x_t.
struct DisturbanceSpec {
  enum class Regime { ZeroMeanNoise, SparseAttack };

  Regime regime = Regime::ZeroMeanNoise;
  NoiseLaw noise;
  AttackLaw attack;

  static DisturbanceSpec zero_mean_noise(NoiseLaw law);
  static DisturbanceSpec sparse_attack(AttackLaw law);

  /// state_dim < 0 skips the bias-dimension check.
  void validate(int state_dim = -1) const;
};

struct DisturbanceDraw {
  Eigen::VectorXd w;
  bool attacked = false;
};

/// Draw w_t given the current state. Under SparseAttack the Bernoulli flag is
/// drawn first and the value coordinates second; a non-attacked step returns
/// the exact zero vector. This draw order is part of the reproducibility
/// contract.
DisturbanceDraw draw_disturbance(const DisturbanceSpec& spec,
                                 const Eigen::Ref<const Eigen::VectorXd>& x_t, RngStream& rng);

}  // namespace sysid
