#pragma once

// Independent test-side oracles. Everything here deliberately recomputes
// results through a different algorithm than the library path it checks.

#include <optional>
#include <utility>
#include <vector>

#include "matkex/bigint.hpp"
#include "matkex/buchberger.hpp"
#include "matkex/mat.hpp"

namespace matkex::oracle {

// Trial division by every integer up to bound (default 10^6); exact for
// n < bound^2, conservative "maybe prime" above.
bool trial_division_prime(const BigInt& n, uint64_t bound = 1'000'000);

// Miller-Rabin written against the textbook, bases from a separate
// generator.
bool miller_rabin_prime(const BigInt& n, int rounds, uint64_t seed);

// Scan x in (-n/2, n/2] for the unique solution of the congruences.
// Intended for tiny moduli products.
std::optional<long> crt_scan(
    const std::vector<std::pair<long, long>>& residues);

// Cofactor-expansion determinant (works over Z and mod p via the ring).
BigInt det_cofactor(const Mat& m);

// Exhaustive enumeration of the variety over F_p^v; requires p^v small.
std::vector<std::vector<uint64_t>> enumerate_variety(
    const std::vector<MPoly>& gens);

// Roots by evaluating every field element; requires small p.
std::vector<uint64_t> roots_brute(const MPoly& f, int var);

// Buchberger with no pair-elimination criteria: process every S-pair in
// FIFO order, then minimalize and inter-reduce. Slow but simple enough to
// trust.
std::vector<MPoly> buchberger_naive(const std::vector<MPoly>& gens);

// Upper-tail p-value of a chi-square statistic with df degrees of freedom.
double chi_square_p_value(double stat, int df);

}  // namespace matkex::oracle
