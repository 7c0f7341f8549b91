#include "matkex/hks.hpp"

#include <stdexcept>

#include "matkex/rng.hpp"

namespace matkex {

Mat poly_sum_eval(const Mat& x, int n) {
  if (n < 2) throw std::invalid_argument("poly_sum_eval: need n >= 2");
  if (x.rows() != x.cols())
    throw std::invalid_argument("poly_sum_eval: square matrix required");
  // Horner: X + X^2 + ... + X^{n-1} = X * (I + X * (I + ...)).
  Mat id = Mat::identity(x.ring(), x.rows());
  Mat acc = id;
  for (int i = 0; i < n - 2; ++i) acc = id + x * acc;
  return x * acc;
}

namespace {

// g(Q) for g with plain coefficient list c[0] + c[1] x + ..., Horner form.
Mat eval_poly_at(const Mat& q, const std::vector<BigInt>& coeffs) {
  const Ring& ring = q.ring();
  int m = q.rows();
  Mat acc(ring, m, m);
  for (size_t i = coeffs.size(); i-- > 0;) {
    acc = q * acc;
    for (int d = 0; d < m; ++d)
      acc.set(d, d, ring.add(acc.at(d, d), coeffs[i]));
  }
  return acc;
}

std::vector<BigInt> random_coeffs(const PrimeField& f, int count, Rng& rng) {
  std::vector<BigInt> c(count);
  for (auto& v : c) v = f.sample(rng);
  return c;
}

}  // namespace

Mat hks_sample_public_image(const HksInstance& inst, Rng& rng) {
  auto g = random_coeffs(*inst.field, inst.deg, rng);
  return poly_sum_eval(eval_poly_at(inst.q, g), inst.n);
}

HksInstance hks_setup(std::shared_ptr<const PrimeField> field, int m, int n,
                      int deg, Rng& rng, bool keep_truth) {
  if (m < 2 || n < 2 || deg < 1)
    throw std::invalid_argument("hks_setup: need m >= 2, n >= 2, deg >= 1");
  Ring ring = Ring::mod(field);

  HksInstance inst{std::move(field), m,
                   n,                deg,
                   Mat::random(ring, m, m, rng), Vec::random(ring, m, rng),
                   Vec(ring, m),     Vec(ring, m),
                   std::nullopt};

  Mat j = eval_poly_at(inst.q, random_coeffs(*inst.field, deg, rng));
  Mat k = eval_poly_at(inst.q, random_coeffs(*inst.field, deg, rng));
  Mat fj = poly_sum_eval(j, n);
  Mat fk = poly_sum_eval(k, n);
  if (!commutes(fj, fk))
    throw std::logic_error("hks_setup: images failed to commute");

  inst.w_a = fj * inst.b;
  inst.w_b = fk * inst.b;

  Vec key_a = fj * inst.w_b;
  Vec key_b = fk * inst.w_a;
  if (!(key_a == key_b))
    throw std::logic_error("hks_setup: honest parties disagree");
  if (keep_truth)
    inst.truth = HksTruth{std::move(j), std::move(k), std::move(key_a)};
  return inst;
}

}  // namespace matkex
