#include "matkex/crt.hpp"

#include <stdexcept>

namespace matkex {

void CrtAccumulator::add(const BigInt& value, const PrimeField& p) {
  if (value.sign() < 0 || !(value < p.p()))
    throw std::invalid_argument("crt: residue out of range [0, p)");
  for (const BigInt& q : primes_)
    if (q == p.p()) throw std::invalid_argument("crt: duplicate modulus");

  // x = value_ + modulus_ * t with t chosen so x = value mod p.
  BigInt minv;
  if (!modulus_.mod(p.p()).invert(p.p(), minv))
    throw std::invalid_argument("crt: moduli not coprime");
  BigInt t = ((value - value_) * minv).mod(p.p());
  value_ += modulus_ * t;
  modulus_ *= p.p();
  primes_.push_back(p.p());
}

BigInt CrtAccumulator::lift() const {
  BigInt r = value_;
  if (r + r > modulus_) r -= modulus_;
  return r;
}

BigInt crt_combine(const std::vector<std::pair<BigInt, PrimeField>>& residues) {
  if (residues.empty())
    throw std::invalid_argument("crt_combine: empty residue list");
  CrtAccumulator acc;
  for (const auto& [v, f] : residues) acc.add(v, f);
  return acc.lift();
}

}  // namespace matkex
