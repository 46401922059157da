#include "sysid/rng.hpp"

#include <cmath>

namespace sysid {
namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Mix (seed, stream_id) into a single engine seed. Two splitmix rounds keep
// nearby keys (seed, 0), (seed, 1), ... statistically unrelated.
std::uint64_t mix_key(std::uint64_t seed, std::uint64_t stream_id) {
  std::uint64_t s = seed;
  std::uint64_t a = splitmix64(s);
  s ^= stream_id * 0xda942042e4dd58b5ULL;
  std::uint64_t b = splitmix64(s);
  return a ^ b;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id), engine_(mix_key(seed, stream_id)) {}

std::uint64_t RngStream::next_u64() { return engine_(); }

double RngStream::uniform01() {
  // Top 53 bits scaled by 2^-53 give the full grid of representable values.
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
  return lo + uniform01() * (hi - lo);
}

double RngStream::normal(double sigma) {
  // log argument in (0, 1], so never log(0)
  const double u1 = 1.0 - uniform01();
  const double u2 = uniform01();
  const double two_pi = 6.283185307179586476925286766559;
  return sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

bool RngStream::bernoulli(double p) { return uniform01() < p; }

RngStream derive_stream(std::uint64_t seed, std::uint64_t trial_index) {
  return RngStream(seed, trial_index);
}

}  // namespace sysid
