#include "matkex/smallfp.hpp"

namespace matkex {

SmallFp::SmallFp(uint64_t p) : p_(p) {
  if (p < 3 || (p & 1) == 0)
    throw std::invalid_argument("SmallFp: modulus must be odd and > 2");
  // Newton iteration for p^{-1} mod 2^64, then negate.
  uint64_t inv = p;
  for (int i = 0; i < 5; ++i) inv *= 2 - p * inv;
  pinv_ = ~inv + 1;

  one_ = (~uint64_t{0}) % p + 1;  // 2^64 mod p
  if (one_ == p) one_ = 0;
  // one_^2 mod p = 2^128 mod p
  r2_ = static_cast<uint64_t>(static_cast<unsigned __int128>(one_) * one_ % p);
}

SmallFp::elt SmallFp::pow(elt a, uint64_t e) const {
  elt r = one_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

SmallFp::elt SmallFp::inv(elt a) const {
  if (a == 0) throw std::domain_error("SmallFp: zero has no inverse");
  return pow(a, p_ - 2);
}

}  // namespace matkex
