#include "matkex/ru.hpp"

#include <stdexcept>

#include "matkex/rng.hpp"

namespace matkex {

BiPoly BiPoly::random(const PrimeField& f, int deg, Rng& rng) {
  BiPoly p{deg, {}};
  for (int i = 0; i <= deg; ++i)
    for (int j = 0; i + j <= deg; ++j) p.coeffs.push_back(f.sample(rng));
  return p;
}

Mat BiPoly::eval(const Mat& c, const Mat& d) const {
  const Ring& ring = c.ring();
  int n = c.rows();
  // Power tables keep this at ~deg matrix products.
  std::vector<Mat> cp{Mat::identity(ring, n)}, dp{Mat::identity(ring, n)};
  for (int i = 1; i <= deg; ++i) cp.push_back(cp.back() * c);
  for (int j = 1; j <= deg; ++j) dp.push_back(dp.back() * d);

  Mat acc(ring, n, n);
  size_t idx = 0;
  for (int i = 0; i <= deg; ++i)
    for (int j = 0; i + j <= deg; ++j, ++idx) {
      const BigInt& coef = coeffs[idx];
      if (coef.is_zero()) continue;
      Mat term = cp[i] * dp[j];
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
          acc.set(r, s, ring.add(acc.at(r, s), ring.mul(coef, term.at(r, s))));
    }
  return acc;
}

RuInstance ru_setup(std::shared_ptr<const PrimeField> field, int n, int deg,
                    Rng& rng, bool keep_truth) {
  if (n < 2 || deg < 1)
    throw std::invalid_argument("ru_setup: need n >= 2, deg >= 1");
  Ring ring = Ring::mod(field);

  Mat c(ring, n, n);
  do {
    c = Mat::random(ring, n, n, rng);
  } while (c.det().is_zero());

  // D = h(C) commutes with C by construction; resample until invertible.
  Mat d_mat(ring, n, n);
  for (;;) {
    std::vector<BigInt> h(deg + 1);
    for (auto& v : h) v = field->sample(rng);
    Mat acc(ring, n, n);
    for (size_t i = h.size(); i-- > 0;) {
      acc = c * acc;
      for (int t = 0; t < n; ++t)
        acc.set(t, t, ring.add(acc.at(t, t), h[i]));
    }
    if (!acc.det().is_zero()) {
      d_mat = std::move(acc);
      break;
    }
  }
  if (!commutes(c, d_mat))
    throw std::logic_error("ru_setup: C and D failed to commute");

  RuInstance inst{std::move(field), n,
                  deg,              std::move(c),
                  std::move(d_mat), Vec::random(ring, n, rng),
                  Vec(ring, n),     Vec(ring, n),
                  std::nullopt};

  BiPoly f_a = BiPoly::random(*inst.field, deg, rng);
  BiPoly f_b = BiPoly::random(*inst.field, deg, rng);
  Mat ma = f_a.eval(inst.c, inst.d_mat);
  Mat mb = f_b.eval(inst.c, inst.d_mat);
  inst.w_a = ma * inst.d;
  inst.w_b = mb * inst.d;

  Vec key_a = ma * inst.w_b;
  Vec key_b = mb * inst.w_a;
  if (!(key_a == key_b))
    throw std::logic_error("ru_setup: honest parties disagree");
  if (keep_truth)
    inst.truth = RuTruth{std::move(f_a), std::move(f_b), std::move(key_a)};
  return inst;
}

}  // namespace matkex
