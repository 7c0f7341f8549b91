#pragma once

#include <cstdint>
#include <stdexcept>

namespace matkex {

// Prime field with word-size modulus (odd p, 2 < p < 2^64) in Montgomery
// form, R = 2^64. This is the coefficient arithmetic for the polynomial
// engine and the fast path of the dense linear solvers; values are opaque
// uint64_t in Montgomery representation.
class SmallFp {
 public:
  using elt = uint64_t;

  explicit SmallFp(uint64_t p);

  uint64_t p() const { return p_; }

  elt zero() const { return 0; }
  elt one() const { return one_; }

  elt from_u64(uint64_t a) const { return mul(a % p_, r2_); }
  uint64_t to_u64(elt a) const { return redc(static_cast<unsigned __int128>(a)); }

  elt add(elt a, elt b) const {
    uint64_t s = a + b;
    if (s >= p_ || s < a) s -= p_;
    return s;
  }
  elt sub(elt a, elt b) const { return a >= b ? a - b : a + p_ - b; }
  elt neg(elt a) const { return a ? p_ - a : 0; }
  elt mul(elt a, elt b) const {
    return redc(static_cast<unsigned __int128>(a) * b);
  }
  elt inv(elt a) const;  // throws std::domain_error on zero
  elt pow(elt a, uint64_t e) const;

  bool is_zero(elt a) const { return a == 0; }

  bool operator==(const SmallFp& o) const { return p_ == o.p_; }

 private:
  uint64_t redc(unsigned __int128 t) const {
    uint64_t m = static_cast<uint64_t>(t) * pinv_;
    unsigned __int128 u = t + static_cast<unsigned __int128>(m) * p_;
    uint64_t r = static_cast<uint64_t>(u >> 64);
    return r >= p_ ? r - p_ : r;
  }

  uint64_t p_;
  uint64_t pinv_;  // -p^{-1} mod 2^64
  uint64_t r2_;    // 2^128 mod p
  uint64_t one_;   // 2^64 mod p
};

}  // namespace matkex
