#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "matkex/buchberger.hpp"
#include "matkex/rng.hpp"
#include "matkex/shape.hpp"
#include "matkex/uniroots.hpp"
#include "oracles.hpp"

using namespace matkex;

namespace {

// Tiny parser-free builder: poly from (coeff, exponents...) tuples.
MPoly build(const PolyCtxPtr& ctx,
            std::vector<std::pair<long, std::vector<int>>> terms) {
  MPoly p(ctx);
  for (auto& [c, exps] : terms) {
    Monomial m;
    for (size_t i = 0; i < exps.size(); ++i) {
      m.e[i] = static_cast<uint8_t>(exps[i]);
      m.deg += exps[i];
    }
    long cc = c % long(ctx->fp.p());
    if (cc < 0) cc += long(ctx->fp.p());
    p.add_term(uint64_t(cc), m);
  }
  p.finish();
  return p;
}

bool same_basis(const std::vector<MPoly>& a, const std::vector<MPoly>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

MPoly random_poly(const PolyCtxPtr& ctx, int max_deg, int nterms, Rng& rng) {
  MPoly p(ctx);
  for (int t = 0; t < nterms; ++t) {
    Monomial m;
    int budget = int(rng.below(max_deg + 1));
    for (int d = 0; d < budget; ++d) {
      int v = int(rng.below(ctx->nvars));
      m.e[v]++;
      m.deg++;
    }
    p.add_term(rng.below(ctx->fp.p()), m);
  }
  p.finish();
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  auto ctx = make_poly_ctx(7, Order::lex, 2);

  MPoly x = MPoly::variable(ctx, 0), y = MPoly::variable(ctx, 1);
  MPoly lhs = (x + y) * (x - y);
  MPoly expect = build(ctx, {{1, {2, 0}}, {-1, {0, 2}}});
  CHECK(lhs == expect);

  CHECK((x - x).is_zero());
  CHECK(MPoly::constant(ctx, 0).is_zero());
  CHECK(MPoly::constant(ctx, 9) == MPoly::constant(ctx, 2));

  MPoly f = build(ctx, {{3, {2, 1}}, {1, {0, 1}}, {5, {0, 0}}});
  CHECK(normal_form(f, {}) == f);
  CHECK(f.degree() == 3);
  CHECK(f.lm() == Monomial::var(0, 2).mul(Monomial::var(1)));
}

TEST_CASE("monomial orders: lex vs degrevlex") {
  Monomial x2 = Monomial::var(0, 2);
  Monomial xy = Monomial::var(0).mul(Monomial::var(1));
  Monomial y3 = Monomial::var(1, 3);

  CHECK(mono_cmp(x2, xy, Order::lex) > 0);
  CHECK(mono_cmp(x2, y3, Order::lex) > 0);     // lex ignores degree
  CHECK(mono_cmp(x2, y3, Order::degrevlex) < 0);  // degree wins
  CHECK(mono_cmp(x2, xy, Order::degrevlex) > 0);

  CHECK(Monomial::var(0).divides(xy));
  CHECK(!xy.divides(x2));
  CHECK(Monomial::lcm(x2, xy) == Monomial::var(0, 2).mul(Monomial::var(1)));
}

TEST_CASE("buchberger frozen textbook bases") {
  SUBCASE("single generator") {
    auto ctx = make_poly_ctx(7, Order::lex, 2);
    MPoly x = MPoly::variable(ctx, 0);
    GbResult gb = buchberger({x});
    REQUIRE(gb.ok());
    REQUIRE(gb.basis.size() == 1);
    CHECK(gb.basis[0] == x);
  }

  SUBCASE("{x^2 - y, y^2 - x} in lex x > y") {
    auto ctx = make_poly_ctx(10007, Order::lex, 2);
    MPoly f1 = build(ctx, {{1, {2, 0}}, {-1, {0, 1}}});
    MPoly f2 = build(ctx, {{1, {0, 2}}, {-1, {1, 0}}});
    GbResult gb = buchberger({f1, f2});
    REQUIRE(gb.ok());
    // Hand elimination: x = y^2, then y^4 - y.
    std::vector<MPoly> expect = {
        build(ctx, {{1, {1, 0}}, {-1, {0, 2}}}),
        build(ctx, {{1, {0, 4}}, {-1, {0, 1}}}),
    };
    CHECK(same_basis(gb.basis, expect));
    CHECK(verify_groebner(gb.basis, {f1, f2}));
  }

  SUBCASE("circle and hyperbola in lex x > y over F_7") {
    auto ctx = make_poly_ctx(7, Order::lex, 2);
    MPoly f1 = build(ctx, {{1, {2, 0}}, {1, {0, 2}}, {-1, {0, 0}}});
    MPoly f2 = build(ctx, {{1, {1, 1}}, {-1, {0, 0}}});
    GbResult gb = buchberger({f1, f2});
    REQUIRE(gb.ok());
    // Hand elimination: x + y^3 - y and y^4 - y^2 + 1.
    std::vector<MPoly> expect = {
        build(ctx, {{1, {1, 0}}, {1, {0, 3}}, {-1, {0, 1}}}),
        build(ctx, {{1, {0, 4}}, {-1, {0, 2}}, {1, {0, 0}}}),
    };
    CHECK(same_basis(gb.basis, expect));
    CHECK(verify_groebner(gb.basis, {f1, f2}));
  }

  SUBCASE("{x + y, xy - 1} in lex x > y over F_7") {
    auto ctx = make_poly_ctx(7, Order::lex, 2);
    MPoly f1 = build(ctx, {{1, {1, 0}}, {1, {0, 1}}});
    MPoly f2 = build(ctx, {{1, {1, 1}}, {-1, {0, 0}}});
    GbResult gb = buchberger({f1, f2});
    REQUIRE(gb.ok());
    // Hand elimination: x = -y, so -y^2 - 1 = 0, monic y^2 + 1.
    std::vector<MPoly> expect = {
        build(ctx, {{1, {1, 0}}, {1, {0, 1}}}),
        build(ctx, {{1, {0, 2}}, {1, {0, 0}}}),
    };
    CHECK(same_basis(gb.basis, expect));
    CHECK(verify_groebner(gb.basis, {f1, f2}));
  }

  SUBCASE("a unit ideal collapses to {1}") {
    auto ctx = make_poly_ctx(7, Order::lex, 2);
    MPoly f1 = MPoly::variable(ctx, 0);
    MPoly unit = MPoly::constant(ctx, 3);
    GbResult gb = buchberger({f1, unit});
    REQUIRE(gb.ok());
    REQUIRE(gb.basis.size() == 1);
    CHECK(gb.basis[0] == MPoly::constant(ctx, 1));
  }
}

TEST_CASE("engine agrees with the criteria-free oracle on random ideals") {
  Rng rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    int v = 2 + int(rng.below(3));
    uint64_t p = trial % 2 ? 7 : 10007;
    Order ord = trial % 3 ? Order::lex : Order::degrevlex;
    auto ctx = make_poly_ctx(p, ord, v);
    std::vector<MPoly> gens;
    int count = 2 + int(rng.below(2));
    for (int i = 0; i < count; ++i)
      gens.push_back(random_poly(ctx, 2, 3, rng));

    GbResult fast = buchberger(gens);
    REQUIRE(fast.ok());
    std::vector<MPoly> slow = oracle::buchberger_naive(gens);
    CHECK(same_basis(fast.basis, slow));
    CHECK(verify_groebner(fast.basis, gens));
  }
}

TEST_CASE("reduced basis is invariant under generator permutation") {
  Rng rng(55);
  auto ctx = make_poly_ctx(31, Order::lex, 3);
  std::vector<MPoly> gens;
  for (int i = 0; i < 4; ++i) gens.push_back(random_poly(ctx, 2, 4, rng));
  GbResult base = buchberger(gens);
  REQUIRE(base.ok());
  for (int perm = 0; perm < 6; ++perm) {
    std::vector<MPoly> shuffled = gens;
    Rng r(perm);
    for (size_t i = shuffled.size(); i > 1; --i)
      std::swap(shuffled[i - 1], shuffled[r.below(i)]);
    GbResult other = buchberger(shuffled);
    REQUIRE(other.ok());
    CHECK(same_basis(base.basis, other.basis));
  }
}

TEST_CASE("ideal membership: explicit combinations reduce to zero") {
  Rng rng(77);
  auto ctx = make_poly_ctx(10007, Order::lex, 3);
  std::vector<MPoly> gens;
  for (int i = 0; i < 3; ++i) gens.push_back(random_poly(ctx, 2, 3, rng));
  GbResult gb = buchberger(gens);
  REQUIRE(gb.ok());
  for (int trial = 0; trial < 50; ++trial) {
    MPoly combo(ctx);
    for (const MPoly& g : gens) combo = combo + random_poly(ctx, 1, 2, rng) * g;
    CHECK(normal_form(combo, gb.basis).is_zero());
  }
}

TEST_CASE("budget exhaustion is a structured failure") {
  auto ctx = make_poly_ctx(10007, Order::lex, 4);
  Rng rng(31);
  std::vector<MPoly> gens;
  for (int i = 0; i < 4; ++i) gens.push_back(random_poly(ctx, 3, 5, rng));
  GbOptions opt;
  opt.max_pairs = 1;
  GbResult gb = buchberger(gens, opt);
  CHECK(gb.status == GbStatus::budget_exhausted);
  CHECK(gb.stats.pairs_popped <= 1);
}

TEST_CASE("univariate_roots frozen examples") {
  auto ctx7 = make_poly_ctx(7, Order::lex, 1);
  MPoly f = build(ctx7, {{1, {2}}, {-1, {0}}});  // x^2 - 1
  CHECK(univariate_roots(f, 0) == std::vector<uint64_t>{1, 6});

  MPoly x = MPoly::variable(ctx7, 0);
  CHECK(univariate_roots(x, 0) == std::vector<uint64_t>{0});

  auto ctx3 = make_poly_ctx(3, Order::lex, 1);
  MPoly g = build(ctx3, {{1, {2}}, {1, {0}}});  // x^2 + 1
  CHECK(univariate_roots(g, 0).empty());

  CHECK_THROWS_AS(univariate_roots(MPoly::constant(ctx7, 2), 0),
                  std::invalid_argument);
}

TEST_CASE("univariate_roots agrees with brute force on small fields") {
  Rng rng(404);
  for (uint64_t p : {5ull, 7ull, 101ull, 1009ull}) {
    auto ctx = make_poly_ctx(p, Order::lex, 1);
    for (int trial = 0; trial < 40; ++trial) {
      MPoly f(ctx);
      int deg = 1 + int(rng.below(6));
      for (int d = 0; d <= deg; ++d)
        f.add_term(rng.below(p), Monomial::var(0, uint8_t(d)));
      f.finish();
      if (f.is_zero() || f.degree() < 1) continue;
      CHECK(univariate_roots(f, 0) == oracle::roots_brute(f, 0));
    }
  }
}

TEST_CASE("univariate_roots over a 64-bit field via splitting") {
  Rng rng(2317);
  PrimeField big = gen_prime(64, rng);
  uint64_t p = big.p().to_u64();
  auto ctx = make_poly_ctx(p, Order::lex, 1);
  SmallFp fp(p);

  // Product of known distinct linear factors times an irreducible-ish tail.
  std::vector<uint64_t> roots = {3, 17, p - 2, 123456789};
  MPoly f = MPoly::constant(ctx, 1);
  for (uint64_t r : roots) {
    MPoly lin(ctx);
    lin.add_term(1, Monomial::var(0));
    lin.add_term(p - r, Monomial::one());
    lin.finish();
    f = f * lin;
  }
  // Multiply by x^2 + 1; it has roots only if -1 is a QR, so root count
  // may grow by 0 or 2 and never collides with the fixed roots.
  MPoly q = build(ctx, {{1, {2}}, {1, {0}}});
  f = f * q;

  std::vector<uint64_t> got = univariate_roots(f, 0);
  std::sort(roots.begin(), roots.end());
  for (uint64_t r : roots) CHECK(std::count(got.begin(), got.end(), r) == 1);
  for (uint64_t r : got) {
    uint64_t val = fp.to_u64(
        f.eval(std::vector<uint64_t>{fp.from_u64(r)}));
    CHECK(val == 0);
  }
}

TEST_CASE("shape_solve frozen examples") {
  SUBCASE("two variables, two assignments") {
    auto ctx = make_poly_ctx(7, Order::lex, 2);
    MPoly g1 = build(ctx, {{1, {1, 0}}, {1, {0, 1}}});   // x1 + x2
    MPoly g2 = build(ctx, {{1, {0, 2}}, {-1, {0, 0}}});  // x2^2 - 1
    ShapeResult r = shape_solve({g1, g2});
    REQUIRE(r.ok());
    REQUIRE(r.solutions.size() == 2);
    CHECK(r.solutions[0] == std::vector<uint64_t>{6, 1});
    CHECK(r.solutions[1] == std::vector<uint64_t>{1, 6});
  }

  SUBCASE("unit ideal: no solutions, not a failure") {
    auto ctx = make_poly_ctx(7, Order::lex, 2);
    ShapeResult r = shape_solve({MPoly::constant(ctx, 1)});
    CHECK(r.ok());
    CHECK(r.solutions.empty());
  }

  SUBCASE("single variable") {
    auto ctx = make_poly_ctx(7, Order::lex, 1);
    MPoly g = build(ctx, {{1, {1}}, {-3, {0}}});
    ShapeResult r = shape_solve({g});
    REQUIRE(r.ok());
    REQUIRE(r.solutions.size() == 1);
    CHECK(r.solutions[0] == std::vector<uint64_t>{3});
  }

  SUBCASE("positive-dimensional ideal is a structured failure") {
    auto ctx = make_poly_ctx(7, Order::lex, 3);
    MPoly g = build(ctx, {{1, {1, 0, 0}}, {1, {0, 1, 0}}});
    ShapeResult r = shape_solve({g});
    CHECK(!r.ok());
  }
}

TEST_CASE("shape_solve solutions match exhaustive enumeration") {
  Rng rng(909);
  int shape_hits = 0;
  for (int trial = 0; trial < 60; ++trial) {
    uint64_t p = trial % 2 ? 5 : 7;
    int v = 2 + int(rng.below(2));  // 2 or 3 variables
    auto ctx = make_poly_ctx(p, Order::lex, v);

    // Plant a shape-position ideal: eliminant with distinct roots plus
    // random tails, then scramble the generators with row operations.
    int npoints = 1 + int(rng.below(3));
    std::vector<uint64_t> roots;
    while (static_cast<int>(roots.size()) < npoints) {
      uint64_t r = rng.below(p);
      bool dup = false;
      for (uint64_t q : roots) dup = dup || q == r;
      if (!dup) roots.push_back(r);
    }
    MPoly elim = MPoly::constant(ctx, 1);
    for (uint64_t r : roots) {
      MPoly lin(ctx);
      lin.add_term(1, Monomial::var(v - 1));
      lin.add_term((p - r) % p, Monomial::one());
      lin.finish();
      elim = elim * lin;
    }
    std::vector<MPoly> gens{elim};
    for (int i = 0; i + 1 < v; ++i) {
      MPoly g = MPoly::variable(ctx, i);
      for (int d = 0; d < npoints; ++d)
        g = g + build(ctx, {{long(rng.below(p)),
                             std::vector<int>(size_t(v), 0)}})
                    .term_scaled(ctx->fp.one(), Monomial::var(v - 1, uint8_t(d)));
      gens.push_back(g);
    }
    // Scramble: add random multiples of other generators.
    std::vector<MPoly> scrambled = gens;
    for (size_t i = 0; i < scrambled.size(); ++i) {
      size_t j = rng.below(gens.size());
      if (j == i) continue;
      scrambled[i] = scrambled[i] + random_poly(ctx, 1, 2, rng) * gens[j];
    }

    GbResult gb = buchberger(scrambled);
    REQUIRE(gb.ok());
    ShapeResult sh = shape_solve(gb.basis);
    auto expected = oracle::enumerate_variety(scrambled);
    if (!sh.ok()) continue;
    ++shape_hits;

    REQUIRE(sh.solutions.size() == expected.size());
    // Both sorted canonically for comparison.
    auto key = [](const std::vector<uint64_t>& s) { return s; };
    std::vector<std::vector<uint64_t>> a = sh.solutions, b = expected;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    for (const auto& sol : a) {
      std::vector<uint64_t> mont(sol.size());
      for (size_t k = 0; k < sol.size(); ++k)
        mont[k] = ctx->fp.from_u64(sol[k]);
      for (const MPoly& g : scrambled) CHECK(g.eval(mont) == 0);
    }
    (void)key;
  }
  CHECK(shape_hits > 30);  // the planted ideals mostly stay in shape position
}
