#pragma once

#include <optional>
#include <vector>

#include "matkex/mat.hpp"

namespace matkex {

class Rng;

// Bivariate polynomial over a prime field, coefficient at (i, j) scaling
// C^i D^j, total degree i + j <= deg.
struct BiPoly {
  int deg;
  std::vector<BigInt> coeffs;  // row-major over (i, j), i + j <= deg

  static BiPoly random(const PrimeField& f, int deg, Rng& rng);
  Mat eval(const Mat& c, const Mat& d) const;
};

struct RuTruth {
  BiPoly f_a, f_b;
  Vec key;
};

// Key agreement from commuting public matrices C, D: the parties publish
// w = f(C, D) * d for secret bivariate polynomials f.
struct RuInstance {
  std::shared_ptr<const PrimeField> field;
  int n;
  int deg;
  Mat c, d_mat;
  Vec d;
  Vec w_a, w_b;
  std::optional<RuTruth> truth;
};

// C random invertible, D = h(C) for random h resampled until invertible,
// secrets of total degree <= deg.
RuInstance ru_setup(std::shared_ptr<const PrimeField> field, int n, int deg,
                    Rng& rng, bool keep_truth);

}  // namespace matkex
