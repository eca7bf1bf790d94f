#pragma once

#include <cstdint>

namespace cannpi::rng {

// SplitMix64. Chosen because the state transition is four lines of u64
// arithmetic, so any language can reproduce the streams bit-exactly.
//
//   next(s): s += 0x9E3779B97F4A7C15
//            z = s
//            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//            z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//            return z ^ (z >> 31)
//
// All arithmetic is mod 2^64.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  // Uniform integer in [lo, hi], inclusive. Plain modulo; the bias is
  // immaterial for range widths used here and the rule is trivial to
  // reproduce elsewhere.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

// SplitMix64 finalizer, used as a mixing function for stream derivation.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Derives an independent child seed from (seed, data). Every substream in
// the project (per-axis, per-sequence, per-epoch) comes from nested
// fold_in calls, so one documented rule covers all of them:
//
//   fold_in(seed, data) = mix64(seed + 0x9E3779B97F4A7C15 * (data + 1))
inline std::uint64_t fold_in(std::uint64_t seed, std::uint64_t data) {
  return mix64(seed + 0x9E3779B97F4A7C15ULL * (data + 1ULL));
}

}  // namespace cannpi::rng
