#pragma once

#include <cstdint>
#include <random>

namespace sysid {

/// Seeded random stream keyed by (seed, stream_id).
///
/// The same key yields the same number sequence on every platform: the
/// mt19937_64 output sequence is fixed by the standard and all variate
/// mappings below are written out explicitly instead of going through
/// std::*_distribution (whose outputs are implementation-defined).
/// Streams are single-owner mutable state; derive one per trial.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next_u64();

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform01();

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);

  /// Zero-mean normal with standard deviation sigma (Box-Muller, two
  /// uniforms consumed per call so replay is position-independent).
  double normal(double sigma);

  /// True with probability p; consumes exactly one uniform.
  bool bernoulli(double p);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

/// Stream for trial `trial_index` under a master seed. Injective in
/// (seed, trial_index); repeated calls return identical streams.
RngStream derive_stream(std::uint64_t seed, std::uint64_t trial_index);

}  // namespace sysid
