#pragma once

#include <optional>

#include "matkex/mat.hpp"

namespace matkex {

class Rng;

// f(X) = X + X^2 + ... + X^{n-1}, the public power sum both parties apply
// to their secret matrix. n >= 2.
Mat poly_sum_eval(const Mat& x, int n);

struct HksTruth {
  Mat j, k;  // the secret matrices
  Vec key;   // shared key f(J) f(K) b
};

// Key agreement over GL_m(F_p): the parties publish w = f(secret) * b
// where both secrets are polynomials in the public matrix Q, which is
// what makes f(J) and f(K) commute.
struct HksInstance {
  std::shared_ptr<const PrimeField> field;
  int m;    // vector-space dimension
  int n;    // power-sum exponent bound
  int deg;  // secret polynomials have degree < deg
  Mat q;
  Vec b;
  Vec w_a, w_b;
  std::optional<HksTruth> truth;
};

HksInstance hks_setup(std::shared_ptr<const PrimeField> field, int m, int n,
                      int deg, Rng& rng, bool keep_truth);

// One draw of the public key-generation algorithm: f(g(Q)) for a fresh
// random polynomial g of degree < deg. This is the sampler the adversary
// replays to harvest commutation constraints.
Mat hks_sample_public_image(const HksInstance& inst, Rng& rng);

}  // namespace matkex
