#pragma once

#include <utility>
#include <vector>

#include "matkex/bigint.hpp"
#include "matkex/prime_field.hpp"

namespace matkex {

// Incremental Chinese-remainder accumulator over pairwise-distinct prime
// moduli. The lift is the centered representative in (-n/2, n/2] with
// n the running modulus product, which is exactly the convention needed
// to pull bounded integer entries back out of their residues.
class CrtAccumulator {
 public:
  CrtAccumulator() : value_(0), modulus_(1) {}

  // Fold in value mod p. Throws std::invalid_argument on a repeated
  // modulus or a value outside [0, p).
  void add(const BigInt& value, const PrimeField& p);

  const BigInt& modulus() const { return modulus_; }

  // Centered lift in (-n/2, n/2].
  BigInt lift() const;

 private:
  BigInt value_;    // canonical residue in [0, modulus_)
  BigInt modulus_;  // product of absorbed primes
  std::vector<BigInt> primes_;
};

// One-shot combination; same contract as feeding every pair through a
// fresh accumulator.
BigInt crt_combine(const std::vector<std::pair<BigInt, PrimeField>>& residues);

}  // namespace matkex
