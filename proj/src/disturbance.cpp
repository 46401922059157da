#include "sysid/disturbance.hpp"

#include <algorithm>
#include <string>

#include "sysid/errors.hpp"

namespace sysid {

NoiseLaw NoiseLaw::uniform_sym(double a) {
  NoiseLaw law;
  law.kind = Kind::UniformSym;
  law.half_width = a;
  law.validate();
  return law;
}

NoiseLaw NoiseLaw::gaussian_iso(double sigma) {
  NoiseLaw law;
  law.kind = Kind::GaussianIso;
  law.sigma = sigma;
  law.validate();
  return law;
}

void NoiseLaw::validate() const {
  if (kind == Kind::UniformSym && !(half_width > 0))
    throw ValidationError("uniform noise half-width must be positive");
  if (kind == Kind::GaussianIso && !(sigma > 0))
    throw ValidationError("gaussian noise sigma must be positive");
}

AttackLaw AttackLaw::state_dependent_uniform(double p, double c, double cap) {
  AttackLaw law;
  law.p = p;
  law.rule = ValueRule::StateDependentUniform;
  law.c = c;
  law.cap = cap;
  law.validate();
  return law;
}

AttackLaw AttackLaw::constant_bias(double p, Eigen::VectorXd bias) {
  AttackLaw law;
  law.p = p;
  law.rule = ValueRule::ConstantBias;
  law.bias = std::move(bias);
  law.validate();
  return law;
}

void AttackLaw::validate() const {
  if (!(p >= 0.0) || !(p < 0.5))
    throw ValidationError("attack probability must lie in [0, 0.5), got " + std::to_string(p));
  if (rule == ValueRule::StateDependentUniform && !(cap >= 0))
    throw ValidationError("attack cap must be non-negative");
  if (rule == ValueRule::ConstantBias && bias.size() == 0)
    throw ValidationError("constant-bias attack needs a bias vector");
}

DisturbanceSpec DisturbanceSpec::zero_mean_noise(NoiseLaw law) {
  DisturbanceSpec spec;
  spec.regime = Regime::ZeroMeanNoise;
  spec.noise = law;
  spec.validate();
  return spec;
}

DisturbanceSpec DisturbanceSpec::sparse_attack(AttackLaw law) {
  DisturbanceSpec spec;
  spec.regime = Regime::SparseAttack;
  spec.attack = std::move(law);
  spec.validate();
  return spec;
}

void DisturbanceSpec::validate(int state_dim) const {
  if (regime == Regime::ZeroMeanNoise) {
    noise.validate();
  } else {
    attack.validate();
    if (state_dim >= 0 && attack.rule == AttackLaw::ValueRule::ConstantBias &&
        attack.bias.size() != state_dim)
      throw DimensionError("constant-bias vector has dimension " +
                           std::to_string(attack.bias.size()) + ", state dim is " +
                           std::to_string(state_dim));
  }
}

DisturbanceDraw draw_disturbance(const DisturbanceSpec& spec,
                                 const Eigen::Ref<const Eigen::VectorXd>& x_t, RngStream& rng) {
  const Eigen::Index n = x_t.size();
  DisturbanceDraw draw;

  if (spec.regime == DisturbanceSpec::Regime::ZeroMeanNoise) {
    draw.w.resize(n);
    if (spec.noise.kind == NoiseLaw::Kind::UniformSym) {
      const double a = spec.noise.half_width;
      for (Eigen::Index i = 0; i < n; ++i) draw.w[i] = rng.uniform(-a, a);
    } else {
      for (Eigen::Index i = 0; i < n; ++i) draw.w[i] = rng.normal(spec.noise.sigma);
    }
    draw.attacked = false;
    return draw;
  }

  // flag first, value second
  draw.attacked = rng.bernoulli(spec.attack.p);
  if (!draw.attacked) {
    draw.w = Eigen::VectorXd::Zero(n);
    return draw;
  }
  if (spec.attack.rule == AttackLaw::ValueRule::StateDependentUniform) {
    const double h = std::min(x_t.norm(), spec.attack.cap);
    draw.w.resize(n);
    for (Eigen::Index i = 0; i < n; ++i)
      draw.w[i] = rng.uniform(spec.attack.c - h, spec.attack.c + h);
  } else {
    draw.w = spec.attack.bias;
  }
  return draw;
}

}  // namespace sysid
