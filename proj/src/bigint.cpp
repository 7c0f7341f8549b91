#include "matkex/bigint.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

#include "matkex/rng.hpp"

namespace matkex {

BigInt::BigInt(const std::string& decimal) {
  if (mpz_init_set_str(z_, decimal.c_str(), 10) != 0) {
    mpz_clear(z_);
    throw std::invalid_argument("BigInt: bad decimal string: " + decimal);
  }
}

BigInt BigInt::from_u64(uint64_t v) {
  BigInt r;
  mpz_import(r.z_, 1, -1, sizeof(v), 0, 0, &v);
  return r;
}

BigInt BigInt::pow2(unsigned k) {
  BigInt r;
  mpz_setbit(r.z_, k);
  return r;
}

std::string BigInt::str() const {
  std::vector<char> buf(mpz_sizeinbase(z_, 10) + 2);
  mpz_get_str(buf.data(), 10, z_);
  return std::string(buf.data());
}

bool BigInt::fits_u64() const {
  return mpz_sgn(z_) >= 0 && mpz_sizeinbase(z_, 2) <= 64;
}

uint64_t BigInt::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("BigInt: does not fit u64");
  uint64_t v = 0;
  mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, z_);
  return v;
}

BigInt BigInt::operator-() const {
  BigInt r(*this);
  mpz_neg(r.z_, r.z_);
  return r;
}

BigInt BigInt::abs() const {
  BigInt r(*this);
  mpz_abs(r.z_, r.z_);
  return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
  BigInt r;
  mpz_add(r.z_, z_, o.z_);
  return r;
}

BigInt BigInt::operator-(const BigInt& o) const {
  BigInt r;
  mpz_sub(r.z_, z_, o.z_);
  return r;
}

BigInt BigInt::operator*(const BigInt& o) const {
  BigInt r;
  mpz_mul(r.z_, z_, o.z_);
  return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
  mpz_add(z_, z_, o.z_);
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) {
  mpz_sub(z_, z_, o.z_);
  return *this;
}

BigInt& BigInt::operator*=(const BigInt& o) {
  mpz_mul(z_, z_, o.z_);
  return *this;
}

BigInt BigInt::mod(const BigInt& m) const {
  BigInt r;
  mpz_fdiv_r(r.z_, z_, m.z_);
  return r;
}

BigInt BigInt::quot(const BigInt& d) const {
  BigInt r;
  mpz_tdiv_q(r.z_, z_, d.z_);
  return r;
}

BigInt BigInt::gcd(const BigInt& o) const {
  BigInt r;
  mpz_gcd(r.z_, z_, o.z_);
  return r;
}

bool BigInt::invert(const BigInt& m, BigInt& out) const {
  return mpz_invert(out.z_, z_, m.z_) != 0;
}

BigInt BigInt::pow_mod(const BigInt& exp, const BigInt& m) const {
  BigInt r;
  mpz_powm(r.z_, z_, exp.z_, m.z_);
  return r;
}

BigInt BigInt::random_bits(Rng& rng, unsigned nbits) {
  BigInt r;
  unsigned words = (nbits + 63) / 64;
  if (words == 0) return r;
  std::vector<uint64_t> raw(words);
  for (auto& w : raw) w = rng.u64();
  unsigned excess = words * 64 - nbits;
  if (excess) raw.back() >>= excess;
  mpz_import(r.z_, words, -1, sizeof(uint64_t), 0, 0, raw.data());
  return r;
}

BigInt BigInt::random_below(Rng& rng, const BigInt& bound) {
  if (bound.sign() <= 0)
    throw std::invalid_argument("random_below: bound must be positive");
  unsigned nbits = static_cast<unsigned>(bound.bit_length());
  for (;;) {
    BigInt r = random_bits(rng, nbits);
    if (r < bound) return r;
  }
}

std::ostream& operator<<(std::ostream& os, const BigInt& x) {
  return os << x.str();
}

}  // namespace matkex
