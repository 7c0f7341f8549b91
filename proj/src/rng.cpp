#include "matkex/rng.hpp"

namespace matkex {

namespace {

inline uint64_t splitmix64(uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(uint64_t seed) {
  uint64_t x = seed;
  for (auto& s : s_) s = splitmix64(x);
}

uint64_t Rng::u64() {
  uint64_t result = rotl(s_[1] * 5, 7) * 9;
  uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

uint64_t Rng::below(uint64_t bound) {
  // Rejection sampling over the top chunk keeps the draw unbiased.
  uint64_t threshold = -bound % bound;
  for (;;) {
    uint64_t r = u64();
    if (r >= threshold) return r % bound;
  }
}

uint64_t Rng::range(uint64_t lo, uint64_t hi) {
  return lo + below(hi - lo + 1);
}

Rng Rng::fork(uint64_t tag) {
  uint64_t x = u64() ^ (tag * 0x9e3779b97f4a7c15ULL);
  return Rng(splitmix64(x));
}

Rng Rng::derive(uint64_t seed, uint64_t stream) {
  uint64_t x = seed;
  uint64_t a = splitmix64(x);
  x = a ^ (stream * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
  return Rng(splitmix64(x));
}

}  // namespace matkex
