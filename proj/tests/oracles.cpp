#include "oracles.hpp"

#include <cmath>
#include <deque>
#include <random>
#include <stdexcept>

namespace matkex::oracle {

bool trial_division_prime(const BigInt& n, uint64_t bound) {
  if (n < BigInt(2)) return false;
  for (uint64_t d = 2; d <= bound; ++d) {
    BigInt bd = BigInt::from_u64(d);
    if (bd * bd > n) return true;
    if (n.mod(bd).is_zero()) return n == bd;
  }
  return true;  // no factor found up to the bound
}

bool miller_rabin_prime(const BigInt& n, int rounds, uint64_t seed) {
  if (n < BigInt(2)) return false;
  for (long q : {2, 3, 5, 7}) {
    if (n == BigInt(q)) return true;
    if (n.mod(BigInt(q)).is_zero()) return false;
  }
  BigInt n1 = n - 1;
  BigInt d = n1;
  unsigned s = 0;
  while (!d.odd()) {
    d = d.quot(2);
    ++s;
  }
  std::mt19937_64 gen(seed);
  for (int r = 0; r < rounds; ++r) {
    // Base from 64-bit randomness folded into [2, n-2].
    BigInt a = BigInt::from_u64(gen()).mod(n - 3) + 2;
    BigInt x = a.pow_mod(d, n);
    if (x.is_one() || x == n1) continue;
    bool witness = true;
    for (unsigned i = 1; i < s && witness; ++i) {
      x = (x * x).mod(n);
      if (x == n1) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

std::optional<long> crt_scan(
    const std::vector<std::pair<long, long>>& residues) {
  long n = 1;
  for (const auto& [v, p] : residues) n *= p;
  for (long x = -n; x <= n; ++x) {
    if (!(2 * x > -n && 2 * x <= n)) continue;  // the interval (-n/2, n/2]
    bool all = true;
    for (const auto& [v, p] : residues)
      all = all && ((x % p + p) % p) == v;
    if (all) return x;
  }
  return std::nullopt;
}

BigInt det_cofactor(const Mat& m) {
  int n = m.rows();
  if (n == 1) return m.at(0, 0);
  const Ring& ring = m.ring();
  BigInt acc(0);
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    Mat minor(ring, n - 1, n - 1);
    for (int r = 1; r < n; ++r)
      for (int c = 0, mc = 0; c < n; ++c) {
        if (c == j) continue;
        minor.set(r - 1, mc++, m.at(r, c));
      }
    BigInt term = ring.mul(m.at(0, j), det_cofactor(minor));
    acc = (j % 2 == 0) ? ring.add(acc, term) : ring.sub(acc, term);
  }
  return acc;
}

std::vector<std::vector<uint64_t>> enumerate_variety(
    const std::vector<MPoly>& gens) {
  if (gens.empty()) throw std::invalid_argument("enumerate_variety: no gens");
  const PolyCtx& ctx = *gens.front().ctx();
  uint64_t p = ctx.fp.p();
  int v = ctx.nvars;
  double total = std::pow(double(p), v);
  if (total > 1e7)
    throw std::invalid_argument("enumerate_variety: search space too big");

  std::vector<std::vector<uint64_t>> sols;
  std::vector<uint64_t> point(v, 0), point_mont(v, ctx.fp.from_u64(0));
  for (;;) {
    bool all = true;
    for (const MPoly& g : gens)
      if (g.eval(point_mont) != 0) {
        all = false;
        break;
      }
    if (all) sols.push_back(point);
    int i = 0;
    while (i < v) {
      if (++point[i] < p) break;
      point[i] = 0;
      ++i;
    }
    if (i == v) break;
    for (int k = 0; k <= i && k < v; ++k)
      point_mont[k] = ctx.fp.from_u64(point[k]);
  }
  return sols;
}

std::vector<uint64_t> roots_brute(const MPoly& f, int var) {
  const PolyCtx& ctx = *f.ctx();
  if (ctx.fp.p() > (1u << 20))
    throw std::invalid_argument("roots_brute: field too large");
  std::vector<uint64_t> roots;
  std::vector<uint64_t> point(ctx.nvars, 0);
  for (uint64_t a = 0; a < ctx.fp.p(); ++a) {
    point[var] = ctx.fp.from_u64(a);
    if (f.eval(point) == 0) roots.push_back(a);
  }
  return roots;
}

std::vector<MPoly> buchberger_naive(const std::vector<MPoly>& gens) {
  std::vector<MPoly> g;
  std::deque<std::pair<size_t, size_t>> pairs;
  for (const MPoly& f : gens) {
    if (f.is_zero()) continue;
    for (size_t i = 0; i < g.size(); ++i) pairs.emplace_back(i, g.size());
    g.push_back(f.monic());
  }
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    MPoly r = normal_form(spoly(g[i], g[j]), g);
    if (r.is_zero()) continue;
    for (size_t k = 0; k < g.size(); ++k) pairs.emplace_back(k, g.size());
    g.push_back(r.monic());
  }
  // Minimalize.
  std::vector<MPoly> min;
  for (size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < g.size() && !redundant; ++j)
      if (i != j && g[j].lm().divides(g[i].lm()))
        redundant = g[j].lm() == g[i].lm() ? j < i : true;
    if (!redundant) min.push_back(g[i]);
  }
  // Inter-reduce until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < min.size(); ++i) {
      std::vector<MPoly> others;
      for (size_t j = 0; j < min.size(); ++j)
        if (j != i) others.push_back(min[j]);
      MPoly r = normal_form(min[i], others);
      if (!(r == min[i])) {
        changed = true;
        if (r.is_zero()) {
          min.erase(min.begin() + i);
          --i;
        } else {
          min[i] = r.monic();
        }
      }
    }
  }
  Order ord = gens.front().ctx()->order;
  std::sort(min.begin(), min.end(), [ord](const MPoly& a, const MPoly& b) {
    return mono_cmp(a.lm(), b.lm(), ord) > 0;
  });
  return min;
}

namespace {

double gamma_q(double a, double x);

double gamma_series_p(double a, double x) {
  double ap = a, sum = 1.0 / a, del = sum;
  for (int n = 0; n < 500; ++n) {
    ap += 1;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * 1e-14) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_cf_q(double a, double x) {
  double tiny = 1e-300;
  double b = x + 1 - a, c = 1 / tiny, d = 1 / b, h = d;
  for (int i = 1; i < 500; ++i) {
    double an = -i * (i - a);
    b += 2;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1) < 1e-14) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

double gamma_q(double a, double x) {
  if (x < 0 || a <= 0) throw std::invalid_argument("gamma_q: bad arguments");
  if (x == 0) return 1;
  if (x < a + 1) return 1 - gamma_series_p(a, x);
  return gamma_cf_q(a, x);
}

}  // namespace

double chi_square_p_value(double stat, int df) {
  return gamma_q(df / 2.0, stat / 2.0);
}

}  // namespace matkex::oracle
