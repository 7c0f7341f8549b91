#include "matkex/uniroots.hpp"

#include <algorithm>
#include <stdexcept>

namespace matkex {

namespace {

// Dense univariate arithmetic over SmallFp, coefficients in Montgomery
// form, index = exponent. Everything here works on polynomials of the
// eliminant's size (degree <= a few dozen), so simplicity wins.
using Dense = std::vector<uint64_t>;

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Dense& a) { return static_cast<int>(a.size()) - 1; }

Dense make_monic(const SmallFp& fp, Dense a) {
  trim(a);
  if (a.empty()) return a;
  uint64_t inv = fp.inv(a.back());
  for (auto& c : a) c = fp.mul(c, inv);
  return a;
}

// a mod b, b monic nonzero.
Dense pmod(const SmallFp& fp, Dense a, const Dense& b) {
  trim(a);
  int db = deg(b);
  while (deg(a) >= db) {
    uint64_t c = a.back();
    int shift = deg(a) - db;
    if (c)
      for (int i = 0; i <= db; ++i)
        a[i + shift] = fp.sub(a[i + shift], fp.mul(c, b[i]));
    a.pop_back();
    trim(a);
  }
  return a;
}

Dense pmul_mod(const SmallFp& fp, const Dense& a, const Dense& b,
               const Dense& m) {
  Dense r(a.size() + b.size(), 0);
  if (a.empty() || b.empty()) return {};
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = fp.add(r[i + j], fp.mul(a[i], b[j]));
  }
  return pmod(fp, std::move(r), m);
}

Dense pgcd(const SmallFp& fp, Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    b = make_monic(fp, std::move(b));
    Dense r = pmod(fp, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(fp, std::move(a));
}

// base^e mod m.
Dense ppowmod(const SmallFp& fp, Dense base, uint64_t e, const Dense& m) {
  Dense r{fp.one()};
  base = pmod(fp, std::move(base), m);
  while (e) {
    if (e & 1) r = pmul_mod(fp, r, base, m);
    base = pmul_mod(fp, base, base, m);
    e >>= 1;
  }
  return r;
}

uint64_t eval_horner(const SmallFp& fp, const Dense& a, uint64_t x) {
  uint64_t acc = 0;
  for (size_t i = a.size(); i-- > 0;) acc = fp.add(fp.mul(acc, x), a[i]);
  return acc;
}

// g: monic product of distinct linear factors; collect its roots.
void split_linear(const SmallFp& fp, Dense g, std::vector<uint64_t>& out) {
  trim(g);
  if (deg(g) < 1) return;
  if (deg(g) == 1) {
    // x + c -> root -c
    out.push_back(fp.to_u64(fp.neg(g[0])));
    return;
  }
  // Root zero first so the quadratic-character split sees x | g gone.
  if (g[0] == 0) {
    out.push_back(0);
    g.erase(g.begin());
    split_linear(fp, std::move(g), out);
    return;
  }
  uint64_t half = (fp.p() - 1) / 2;
  for (uint64_t a = 0;; ++a) {
    // w = (x + a)^((p-1)/2) - 1 separates roots by quadratic character.
    Dense base{fp.from_u64(a), fp.one()};
    Dense w = ppowmod(fp, std::move(base), half, g);
    if (w.empty())
      w = Dense{fp.neg(fp.one())};
    else
      w[0] = fp.sub(w[0], fp.one());
    Dense d = pgcd(fp, w, g);
    if (deg(d) >= 1 && deg(d) < deg(g)) {
      Dense q = g;
      // q = g / d by repeated subtraction is overkill; do long division.
      Dense quot(deg(g) - deg(d) + 1, 0);
      Dense rem = g;
      while (deg(rem) >= deg(d)) {
        int shift = deg(rem) - deg(d);
        uint64_t c = rem.back();
        quot[shift] = c;
        for (int i = 0; i <= deg(d); ++i)
          rem[i + shift] = fp.sub(rem[i + shift], fp.mul(c, d[i]));
        trim(rem);
      }
      split_linear(fp, std::move(d), out);
      split_linear(fp, std::move(quot), out);
      return;
    }
  }
}

}  // namespace

std::vector<uint64_t> univariate_roots_dense(std::vector<uint64_t> coeffs,
                                             const SmallFp& fp) {
  Dense f(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) f[i] = fp.from_u64(coeffs[i]);
  trim(f);
  if (deg(f) < 1)
    throw std::invalid_argument("univariate_roots: degree must be >= 1");

  std::vector<uint64_t> roots;
  if (fp.p() < (1u << 16)) {
    for (uint64_t a = 0; a < fp.p(); ++a)
      if (eval_horner(fp, f, fp.from_u64(a)) == 0) roots.push_back(a);
    return roots;
  }

  f = make_monic(fp, std::move(f));
  // x^p mod f, then gcd with x^p - x isolates the distinct linear part.
  Dense x{0, fp.one()};
  Dense xp = ppowmod(fp, x, fp.p(), f);
  // xp - x
  if (xp.size() < 2) xp.resize(2, 0);
  xp[1] = fp.sub(xp[1], fp.one());
  Dense g = pgcd(fp, std::move(xp), f);
  if (deg(g) >= 1) split_linear(fp, std::move(g), roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<uint64_t> univariate_roots(const MPoly& f, int var) {
  return univariate_roots_dense(f.dense_univariate(var), f.ctx()->fp);
}

}  // namespace matkex
