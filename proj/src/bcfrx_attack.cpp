#include "matkex/bcfrx_attack.hpp"

#include <chrono>
#include <set>
#include <stdexcept>

#include "matkex/linsolve.hpp"
#include "matkex/rng.hpp"

namespace matkex {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

constexpr std::array<int, 4> kI{1, 0, 0, 1};
constexpr std::array<int, 4> kDiag{1, 0, 0, 0};
constexpr std::array<int, 4> kZero{0, 0, 0, 0};
constexpr std::array<int, 4> kE01{0, 1, 0, 0};

// Variable layout: x1..x8 (indices 0..7) the unknown entries of N in
// row-major order, x9..x24 (indices 8..23) the entries of N^-1.
constexpr int kNVars = 24;

int n_var(int i, int j) {
  // Unknown positions of N: the 12-block then the 21-block, row-major.
  static constexpr int pos[4][4] = {{-1, -1, 0, 1},
                                    {-1, -1, 2, 3},
                                    {4, 5, -1, -1},
                                    {6, 7, -1, -1}};
  return pos[i][j];
}

int ninv_var(int i, int j) { return 8 + 4 * i + j; }

struct SymMat {
  std::vector<MPoly> e;  // 16 entries row-major

  const MPoly& at(int i, int j) const { return e[4 * i + j]; }
};

SymMat symbolic_n(const PolyCtxPtr& ctx, const RestrictedCombo& combo) {
  SymMat n;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int v = n_var(i, j);
      if (v >= 0) {
        n.e.push_back(MPoly::variable(ctx, v));
      } else {
        bool upper = i < 2;
        int bi = upper ? i : i - 2, bj = upper ? j : j - 2;
        int val = (upper ? combo.n11 : combo.n22)[2 * bi + bj];
        n.e.push_back(MPoly::constant(ctx, val));
      }
    }
  return n;
}

SymMat symbolic_ninv(const PolyCtxPtr& ctx) {
  SymMat n;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      n.e.push_back(MPoly::variable(ctx, ninv_var(i, j)));
  return n;
}

// Left-multiply the symbolic matrix by a scalar matrix: (A * S)_{ij}.
SymMat mul_sym_scalar(const SymMat& a, const std::array<uint64_t, 16>& s,
                      const PolyCtxPtr& ctx) {
  SymMat r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      MPoly acc(ctx);
      for (int k = 0; k < 4; ++k) {
        uint64_t c = s[4 * k + j];
        if (!c) continue;
        acc = acc + a.at(i, k).term_scaled(ctx->fp.from_u64(c),
                                           Monomial::one());
      }
      r.e.push_back(std::move(acc));
    }
  return r;
}

SymMat mul_sym_sym(const SymMat& a, const SymMat& b, const PolyCtxPtr& ctx) {
  SymMat r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      MPoly acc(ctx);
      for (int k = 0; k < 4; ++k) acc = acc + a.at(i, k) * b.at(k, j);
      r.e.push_back(std::move(acc));
    }
  return r;
}

std::array<uint64_t, 16> to_words(const Mat& m) {
  std::array<uint64_t, 16> w;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) w[4 * i + j] = m.at(i, j).to_u64();
  return w;
}

const PrimeField& attack_field(const BcfrxTranscript& t) {
  if (!t.c.ring().is_field())
    throw std::invalid_argument("bcfrx attack: transcript must be mod p");
  const PrimeField& f = t.c.ring().field();
  if (!f.fits_u64())
    throw std::invalid_argument(
        "bcfrx attack: primes beyond 64 bits are not supported");
  return f;
}

}  // namespace

std::vector<RestrictedCombo> restricted_combos(bool extended) {
  std::vector<RestrictedCombo> out;
  const std::array<int, 4> base[3] = {kI, kDiag, kZero};
  int id = 0;
  for (const auto& a : base)
    for (const auto& b : base) out.push_back({id++, a, b});
  if (extended) {
    const std::array<int, 4> all[4] = {kI, kDiag, kZero, kE01};
    for (const auto& a : all)
      for (const auto& b : all) {
        bool fresh = a == kE01 || b == kE01;
        if (fresh) out.push_back({id++, a, b});
      }
  }
  return out;
}

PolySystem build_system(const BcfrxTranscript& t, const RestrictedCombo& combo,
                        const std::vector<BcfrxTranscript>& extras) {
  const PrimeField& f = attack_field(t);
  PolyCtxPtr ctx = make_poly_ctx(f.p().to_u64(), Order::lex, kNVars);

  SymMat n = symbolic_n(ctx, combo);
  SymMat ninv = symbolic_ninv(ctx);

  PolySystem sys{ctx, t.c.ring().field_ptr(), {}};
  auto conj_blocks = [&](const BcfrxTranscript& tr) {
    SymMat nc = mul_sym_scalar(n, to_words(tr.c), ctx);
    SymMat nd = mul_sym_scalar(n, to_words(tr.d), ctx);
    SymMat ne = mul_sym_scalar(n, to_words(tr.e), ctx);
    SymMat ncn = mul_sym_sym(nc, ninv, ctx);
    SymMat ndn = mul_sym_sym(nd, ninv, ctx);
    SymMat nen = mul_sym_sym(ne, ninv, ctx);
    // Bob's pads drop out of the 22 block, Alice's out of the 11 block.
    for (int i = 2; i < 4; ++i)
      for (int j = 2; j < 4; ++j)
        sys.gens.push_back(ndn.at(i, j) - ncn.at(i, j));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        sys.gens.push_back(ndn.at(i, j) - nen.at(i, j));
  };

  conj_blocks(t);
  SymMat prod = mul_sym_sym(n, ninv, ctx);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      MPoly eq = prod.at(i, j);
      if (i == j) eq = eq - MPoly::constant(ctx, 1);
      sys.gens.push_back(std::move(eq));
    }
  for (const auto& ex : extras) {
    if (!(ex.c.ring() == t.c.ring()))
      throw std::invalid_argument("build_system: extras on a different prime");
    conj_blocks(ex);
  }
  return sys;
}

std::vector<CandidateN> solve_for_n(const PolySystem& sys,
                                    const RestrictedCombo& combo,
                                    const BcfrxAttackOptions& opt,
                                    SolveStats* stats) {
  const SmallFp& fp = sys.ctx->fp;
  SolveStats local;
  std::vector<CandidateN> out;

  GbResult gb = buchberger(sys.gens, opt.gb);
  local.gb_status = gb.status;
  local.gb = gb.stats;
  if (gb.status != GbStatus::ok) {
    if (stats) *stats = local;
    return out;
  }
  if (opt.verify_basis)
    local.basis_verified = verify_groebner(gb.basis, sys.gens);

  ShapeResult sh = shape_solve(gb.basis);
  local.shape_ok = sh.ok();
  local.eliminant_degree = sh.eliminant_degree;
  local.max_cofactor_degree = sh.max_cofactor_degree;

  Ring ring = Ring::mod(sys.field);

  auto materialize = [&](const std::vector<uint64_t>& sol) {
    Mat n(ring, 4, 4), ninv(ring, 4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        int v = n_var(i, j);
        if (v >= 0) {
          n.set(i, j, BigInt::from_u64(sol[v]));
        } else {
          bool upper = i < 2;
          int bi = upper ? i : i - 2, bj = upper ? j : j - 2;
          n.set(i, j, (upper ? combo.n11 : combo.n22)[2 * bi + bj]);
        }
        ninv.set(i, j, BigInt::from_u64(sol[ninv_var(i, j)]));
      }
    if ((n * ninv).is_identity())
      out.push_back(CandidateN{std::move(n), std::move(ninv), combo.id,
                               sol[ninv_var(3, 3)]});
  };

  if (sh.ok())
    for (const auto& sol : sh.solutions) materialize(sol);

  if (out.empty()) {
    // Degenerate transcripts (e.g. an effectively block-diagonal key) can
    // leave the ideal positive-dimensional; probe the zero completion of
    // the combo before giving up.
    Mat n0(ring, 4, 4);
    for (int b = 0; b < 2; ++b)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          n0.set(2 * b + i, 2 * b + j,
                 (b == 0 ? combo.n11 : combo.n22)[2 * i + j]);
    if (!n0.det().is_zero()) {
      Mat n0i = n0.inverse();
      std::vector<uint64_t> point(kNVars, 0);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          point[ninv_var(i, j)] = fp.from_u64(n0i.at(i, j).to_u64());
      bool fits = true;
      for (const MPoly& g : sys.gens)
        if (g.eval(point) != 0) {
          fits = false;
          break;
        }
      if (fits)
        out.push_back(CandidateN{std::move(n0), std::move(n0i), combo.id,
                                 fp.to_u64(point[ninv_var(3, 3)])});
    }
  }

  if (stats) *stats = local;
  return out;
}

std::optional<Mat> recover_key_mod_p(const BcfrxTranscript& t,
                                     const CandidateN& cand) {
  attack_field(t);
  const Mat& n = cand.n;
  const Mat& ninv = cand.n_inv;

  Mat cp = n * t.c * ninv;
  Mat dp = n * t.d * ninv;
  Mat ep = n * t.e * ninv;

  Mat kp(n.ring(), 4, 4);
  kp.set_block(0, 0, block_get(cp, 1, 1));
  kp.set_block(2, 2, block_get(ep, 2, 2));

  // K'12 survives any solution of X * D'12 = C'12.
  auto x = solve_left(block_get(dp, 1, 2), block_get(cp, 1, 2));
  if (!x) return std::nullopt;
  kp.set_block(0, 2, *x * block_get(ep, 1, 2));

  // Mirror image for K'21: D'21 * Y = C'21.
  auto y = solve_right(block_get(dp, 2, 1), block_get(cp, 2, 1));
  if (!y) return std::nullopt;
  kp.set_block(2, 0, block_get(ep, 2, 1) * *y);

  return ninv * kp * n;
}

ModPAttackResult attack_bcfrx_mod_p(const BcfrxTranscript& t,
                                    const std::vector<BcfrxTranscript>& extras,
                                    const BcfrxAttackOptions& opt) {
  ModPAttackResult res;
  for (const RestrictedCombo& combo : restricted_combos(opt.extended_combos)) {
    PolySystem sys = build_system(t, combo, extras);
    SolveStats stats;
    std::vector<CandidateN> cands = solve_for_n(sys, combo, opt, &stats);

    std::vector<Mat> keys;
    for (const auto& cand : cands) {
      auto k = recover_key_mod_p(t, cand);
      if (!k) continue;
      bool dup = false;
      for (const Mat& seen : keys) dup = dup || seen == *k;
      if (!dup) keys.push_back(std::move(*k));
    }
    if (!keys.empty()) {
      res.success = true;
      res.keys = std::move(keys);
      res.candidates = std::move(cands);
      res.combo_used = combo.id;
      res.solve = stats;
      return res;
    }
    if (combo.id == 0) res.solve = stats;  // keep the main combo's diagnostics
  }
  return res;
}

IntegerAttackReport attack_bcfrx_integer(
    const std::vector<BcfrxTranscript>& transcripts, unsigned prime_bits,
    uint64_t seed, const BcfrxAttackOptions& opt) {
  if (transcripts.empty())
    throw std::invalid_argument("attack_bcfrx_integer: need a transcript");
  for (const auto& t : transcripts)
    if (t.c.ring().is_field())
      throw std::invalid_argument("attack_bcfrx_integer: transcripts over Z");

  IntegerAttackReport rep;
  rep.seed = seed;
  Rng rng(seed);

  struct Chain {
    BigInt n;                 // running modulus
    std::array<BigInt, 16> v;  // canonical residues mod n
    Mat lift;
    Chain() : lift(Ring::integers(), 4, 4) {}
  };
  std::vector<Chain> chains;
  std::set<std::string> used;

  auto centered_lift = [](const Chain& ch) {
    Mat m(Ring::integers(), 4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        BigInt x = ch.v[4 * i + j];
        if (x + x > ch.n) x -= ch.n;
        m.set(i, j, x);
      }
    return m;
  };

  for (int step = 0; step < opt.max_primes; ++step) {
    auto t0 = Clock::now();
    PrimeField p = gen_prime(prime_bits, rng);
    while (used.count(p.p().str())) p = gen_prime(prime_bits, rng);
    used.insert(p.p().str());
    rep.gen_millis += ms_since(t0);

    auto fld = std::make_shared<const PrimeField>(p);
    BcfrxTranscript t = transcripts.front().reduced(fld);
    std::vector<BcfrxTranscript> extras;
    for (size_t i = 1; i < transcripts.size(); ++i)
      extras.push_back(transcripts[i].reduced(fld));

    t0 = Clock::now();
    ModPAttackResult modp = attack_bcfrx_mod_p(t, extras, opt);
    double spent = ms_since(t0);
    rep.modp_millis += spent;
    rep.primes.push_back(
        {p.p().str(), modp.keys.size(), modp.success, spent});

    if (!modp.success) continue;

    t0 = Clock::now();
    if (chains.empty()) {
      for (const Mat& k : modp.keys) {
        Chain ch;
        ch.n = p.p();
        for (int i = 0; i < 16; ++i) ch.v[i] = k.at(i / 4, i % 4);
        ch.lift = centered_lift(ch);
        chains.push_back(std::move(ch));
      }
      rep.crt_millis += ms_since(t0);
      continue;
    }

    std::vector<Chain> next;
    for (const Chain& ch : chains) {
      BigInt ninv;
      if (!ch.n.mod(p.p()).invert(p.p(), ninv)) continue;  // cannot happen
      for (const Mat& k : modp.keys) {
        Chain nx;
        nx.n = ch.n * p.p();
        for (int i = 0; i < 16; ++i) {
          const BigInt& r = k.at(i / 4, i % 4);
          BigInt tfac = ((r - ch.v[i]) * ninv).mod(p.p());
          nx.v[i] = ch.v[i] + ch.n * tfac;
        }
        nx.lift = centered_lift(nx);
        bool stable = nx.lift == ch.lift;
        if (stable && nx.lift.det() == BigInt(1)) {
          rep.success = true;
          rep.key = nx.lift;
          rep.primes_used = step + 1;
          rep.lambda_estimate = nx.lift.max_abs() * 2 + 1;
          rep.crt_millis += ms_since(t0);
          return rep;
        }
        next.push_back(std::move(nx));
      }
    }
    if (next.size() > opt.max_chains) {
      // Wrong chains blow up toward the modulus; the true one stays small.
      std::sort(next.begin(), next.end(), [](const Chain& a, const Chain& b) {
        return a.lift.max_abs() < b.lift.max_abs();
      });
      next.resize(opt.max_chains);
    }
    chains = std::move(next);
    rep.crt_millis += ms_since(t0);
  }
  rep.primes_used = static_cast<int>(rep.primes.size());
  return rep;
}

}  // namespace matkex
