#include "matkex/prime_field.hpp"

#include "matkex/rng.hpp"

namespace matkex {

namespace {

// Miller-Rabin witness loop for odd n > 2 and base a in [2, n-2].
bool mr_round(const BigInt& n, const BigInt& n1, const BigInt& d, unsigned s,
              const BigInt& a) {
  BigInt x = a.pow_mod(d, n);
  if (x.is_one() || x == n1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = (x * x).mod(n);
    if (x == n1) return true;
  }
  return false;
}

}  // namespace

bool is_probable_prime(const BigInt& n, Rng& rng) {
  static const int kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (int q : kSmall) {
    BigInt b(q);
    if (n == b) return true;
    if (n.mod(b).is_zero()) return false;
  }
  if (!n.odd()) return false;

  BigInt n1 = n - 1;
  BigInt d = n1;
  unsigned s = 0;
  while (!d.odd()) {
    d = d.quot(2);
    ++s;
  }
  BigInt span = n - 3;  // bases drawn from [2, n-2]
  for (int round = 0; round < 64; ++round) {
    BigInt a = BigInt::random_below(rng, span) + 2;
    if (!mr_round(n, n1, d, s, a)) return false;
  }
  return true;
}

PrimeField::PrimeField(BigInt p) : p_(std::move(p)) {
  if (!(p_ > BigInt(2)))
    throw std::invalid_argument("PrimeField: modulus must exceed 2");
  bits_ = static_cast<unsigned>(p_.bit_length());
  Rng rng(0x9d5ad7f0c5u ^ bits_);  // certification only; result is not random
  if (!is_probable_prime(p_, rng))
    throw std::invalid_argument("PrimeField: modulus is not prime");
}

BigInt PrimeField::inv(const BigInt& a) const {
  BigInt out;
  if (!a.mod(p_).invert(p_, out)) throw NonInvertible();
  return out;
}

BigInt PrimeField::centered(const BigInt& v) const {
  BigInt r = v.mod(p_);
  if (r + r > p_) r -= p_;
  return r;
}

Residue mod_inverse(const Residue& a) {
  if (a.is_zero()) throw NonInvertible();
  return Residue(a.field().inv(a.value()), a.field_ptr());
}

PrimeField gen_prime(unsigned bits, Rng& rng) {
  if (bits < 3) throw std::invalid_argument("gen_prime: need bits >= 3");
  BigInt top = BigInt::pow2(bits - 1);
  for (;;) {
    // Top bit set forces exactly `bits` bits; oddness costs nothing.
    BigInt c = BigInt::random_bits(rng, bits - 1) + top;
    if (!c.odd()) c += 1;
    if (is_probable_prime(c, rng)) return PrimeField(c);
  }
}

}  // namespace matkex
