#pragma once

#include <cstdint>
#include <vector>

#include "matkex/mpoly.hpp"

namespace matkex {

struct GbOptions {
  // Pairs popped from the queue before giving up.
  uint64_t max_pairs = 1u << 20;
  // Total reduction steps (one divisor subtraction each) before giving up.
  uint64_t max_steps = 400'000'000;
};

enum class GbStatus { ok, budget_exhausted };

struct GbStats {
  uint64_t pairs_generated = 0;
  uint64_t pairs_popped = 0;
  uint64_t zero_reductions = 0;
  uint64_t steps = 0;
  unsigned max_degree = 0;
  size_t basis_size = 0;
};

struct GbResult {
  GbStatus status = GbStatus::ok;
  std::vector<MPoly> basis;  // reduced (auto-reduced, monic) when ok
  GbStats stats;

  bool ok() const { return status == GbStatus::ok; }
};

// Remainder of f under multivariate division by gens (searched in order).
// steps, when given, accumulates the reduction-step count.
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& gens,
                  uint64_t* steps = nullptr);

MPoly spoly(const MPoly& f, const MPoly& g);

// Buchberger with the Gebauer-Moller pair filters and normal selection
// (minimal lcm first). Returns the unique reduced Groebner basis of the
// input ideal for the context order.
GbResult buchberger(const std::vector<MPoly>& gens, const GbOptions& opt = {});

// Certificate check: every S-polynomial of basis pairs reduces to zero and
// every original generator reduces to zero.
bool verify_groebner(const std::vector<MPoly>& basis,
                     const std::vector<MPoly>& gens);

}  // namespace matkex
