#pragma once

#include <cstdint>

namespace dlab {

/// splitmix64 step. Passes through zero-free statistical use here; chosen
/// for counter-friendliness, not cryptography.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Independent substream addressed by (seed, index). Each walk owns one,
/// so results never depend on evaluation order or walk interleaving.
class SubStream {
 public:
  SubStream(std::uint64_t seed, std::uint64_t index) {
    // Decorrelate the (seed, index) lattice before streaming.
    std::uint64_t s = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    state_ = splitmix64(s);
  }

  std::uint64_t next_u64() { return splitmix64(state_); }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace dlab
