#pragma once

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace matkex {

class Rng;

// Arbitrary-precision signed integer with value semantics. Backed by GMP,
// which keeps the canonical sign-magnitude form (no leading zero limbs,
// unique zero) for us. Serialized everywhere as a decimal string.
class BigInt {
 public:
  BigInt() { mpz_init(z_); }
  BigInt(long v) { mpz_init_set_si(z_, v); }  // NOLINT: implicit by design
  explicit BigInt(const std::string& decimal);

  BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
  BigInt(BigInt&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  BigInt& operator=(const BigInt& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  BigInt& operator=(BigInt&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }
  ~BigInt() { mpz_clear(z_); }

  static BigInt from_u64(uint64_t v);
  static BigInt pow2(unsigned k);  // 2^k

  std::string str() const;

  int sign() const { return mpz_sgn(z_); }
  bool is_zero() const { return mpz_sgn(z_) == 0; }
  bool is_one() const { return mpz_cmp_ui(z_, 1) == 0; }
  bool odd() const { return mpz_odd_p(z_) != 0; }

  // Number of bits in |x|; bit_length(0) == 0.
  size_t bit_length() const {
    return is_zero() ? 0 : mpz_sizeinbase(z_, 2);
  }

  bool fits_u64() const;
  uint64_t to_u64() const;  // requires 0 <= x < 2^64

  BigInt operator-() const;
  BigInt abs() const;

  BigInt operator+(const BigInt& o) const;
  BigInt operator-(const BigInt& o) const;
  BigInt operator*(const BigInt& o) const;
  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);

  // Floor-mod: result in [0, m) for m > 0.
  BigInt mod(const BigInt& m) const;
  // Truncating quotient (rounds toward zero).
  BigInt quot(const BigInt& d) const;

  BigInt gcd(const BigInt& o) const;
  // Multiplicative inverse mod m; returns false if none exists.
  bool invert(const BigInt& m, BigInt& out) const;
  BigInt pow_mod(const BigInt& exp, const BigInt& m) const;

  std::strong_ordering operator<=>(const BigInt& o) const {
    int c = mpz_cmp(z_, o.z_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }
  bool operator==(const BigInt& o) const { return mpz_cmp(z_, o.z_) == 0; }

  // Uniform in [0, 2^nbits); draws whole 64-bit words from rng.
  static BigInt random_bits(Rng& rng, unsigned nbits);
  // Uniform in [0, bound), bound > 0.
  static BigInt random_below(Rng& rng, const BigInt& bound);

 private:
  mpz_t z_;
};

std::ostream& operator<<(std::ostream& os, const BigInt& x);

}  // namespace matkex
