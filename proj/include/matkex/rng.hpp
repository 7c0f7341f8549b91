#pragma once

#include <cstdint>

namespace matkex {

// Deterministic xoshiro256** generator. Every random choice in the
// workbench flows through one of these, seeded explicitly, so any run
// can be replayed from its seed.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t u64();

  // Uniform in [0, bound). bound > 0.
  uint64_t below(uint64_t bound);

  // Uniform in [lo, hi] inclusive.
  uint64_t range(uint64_t lo, uint64_t hi);

  bool coin() { return (u64() >> 63) != 0; }

  // +1 or -1.
  int sign() { return coin() ? 1 : -1; }

  // Independent child generator; parent state advances by one draw.
  Rng fork(uint64_t tag);

  // Stream derivation that does not depend on any draw order: the
  // generator for trial `stream` of a run seeded with `seed`.
  static Rng derive(uint64_t seed, uint64_t stream);

 private:
  uint64_t s_[4];
};

}  // namespace matkex
