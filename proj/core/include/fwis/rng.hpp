#pragma once

#include <cmath>
#include <cstdint>

namespace fwis {

// Counter-based splittable generator (splitmix64 core).  A stream is
// keyed by (master_seed, stream_index); the k-th output is a pure
// function of the key and k, so streams are reproducible and
// independent of scheduling.  Worker counts never touch the draws.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(mix(seed ^ kInit)) {}

  // Child stream for one Monte Carlo path (or sub-task).
  static RngStream child(std::uint64_t master_seed, std::uint64_t index) {
    std::uint64_t key = mix(master_seed ^ kInit) ^ mix(index * kGamma + kInit2);
    RngStream s(0);
    s.state_ = mix(key);
    return s;
  }

  std::uint64_t next_u64() {
    state_ += kGamma;
    return mix(state_);
  }

  // Uniform on [2^-53, 1]; never 0 so log() is safe.
  double uniform01() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1p-53;
  }

  // Standard normal via Box-Muller; the sine half is cached.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return negate_ ? -spare_ : spare_;
    }
    double u1 = uniform01();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    double g = r * std::cos(a);
    return negate_ ? -g : g;
  }

  // Antithetic twin: identical uniforms, negated gaussians.
  RngStream antithetic() const {
    RngStream s = *this;
    s.negate_ = !negate_;
    return s;
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
  static constexpr std::uint64_t kInit = 0x8f1b72d4c9a36e05ull;
  static constexpr std::uint64_t kInit2 = 0xd6e8feb86659fd93ull;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
  bool negate_ = false;
};

}  // namespace fwis
