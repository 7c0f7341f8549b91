#pragma once

#include <memory>
#include <stdexcept>

#include "matkex/bigint.hpp"

namespace matkex {

class Rng;

struct NonInvertible : std::domain_error {
  NonInvertible() : std::domain_error("element is not invertible") {}
};

// Odd prime modulus with the usual field operations on canonical
// representatives in [0, p). Primality is certified at construction by
// 64 rounds of Miller-Rabin (worst-case error 2^-128).
class PrimeField {
 public:
  // p must be a prime > 2; throws std::invalid_argument otherwise.
  explicit PrimeField(BigInt p);

  const BigInt& p() const { return p_; }
  unsigned bit_length() const { return bits_; }
  bool fits_u64() const { return bits_ <= 64; }

  BigInt canon(const BigInt& v) const { return v.mod(p_); }

  BigInt add(const BigInt& a, const BigInt& b) const { return (a + b).mod(p_); }
  BigInt sub(const BigInt& a, const BigInt& b) const { return (a - b).mod(p_); }
  BigInt mul(const BigInt& a, const BigInt& b) const { return (a * b).mod(p_); }
  BigInt neg(const BigInt& a) const { return (-a).mod(p_); }
  BigInt inv(const BigInt& a) const;
  BigInt pow(const BigInt& a, const BigInt& e) const { return a.pow_mod(e, p_); }

  // Centered representative in (-p/2, p/2].
  BigInt centered(const BigInt& v) const;

  BigInt sample(Rng& rng) const { return BigInt::random_below(rng, p_); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  BigInt p_;
  unsigned bits_;
};

// A value in [0, p) tagged with its field. Cheap to copy; fields compare
// by modulus.
class Residue {
 public:
  Residue(BigInt v, std::shared_ptr<const PrimeField> f)
      : v_(f->canon(v)), f_(std::move(f)) {}

  const BigInt& value() const { return v_; }
  const PrimeField& field() const { return *f_; }
  const std::shared_ptr<const PrimeField>& field_ptr() const { return f_; }

  Residue operator+(const Residue& o) const { return wrap(f_->add(v_, o.check(*this))); }
  Residue operator-(const Residue& o) const { return wrap(f_->sub(v_, o.check(*this))); }
  Residue operator*(const Residue& o) const { return wrap(f_->mul(v_, o.check(*this))); }
  Residue operator-() const { return wrap(f_->neg(v_)); }

  bool is_zero() const { return v_.is_zero(); }
  bool operator==(const Residue& o) const {
    return *f_ == *o.f_ && v_ == o.v_;
  }

 private:
  Residue wrap(BigInt v) const { return Residue(std::move(v), f_); }
  const BigInt& check(const Residue& self) const {
    if (!(*f_ == *self.f_))
      throw std::invalid_argument("Residue: mixed fields");
    return v_;
  }

  BigInt v_;
  std::shared_ptr<const PrimeField> f_;
};

// a^{-1} in a's field; throws NonInvertible when a == 0.
Residue mod_inverse(const Residue& a);

// Miller-Rabin, 64 deterministic-given-rng rounds. n > 2.
bool is_probable_prime(const BigInt& n, Rng& rng);

// Uniform prime of exactly `bits` bits (top bit set). bits >= 3.
PrimeField gen_prime(unsigned bits, Rng& rng);

}  // namespace matkex
