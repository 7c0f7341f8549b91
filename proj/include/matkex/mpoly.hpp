#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "matkex/smallfp.hpp"

namespace matkex {

enum class Order { lex, degrevlex };

// Exponent vector over at most 32 variables. Unused slots stay zero, so
// comparisons and divisibility can always sweep the whole array.
struct Monomial {
  static constexpr int kMaxVars = 32;

  std::array<uint8_t, kMaxVars> e{};
  uint16_t deg = 0;

  static Monomial one() { return {}; }
  static Monomial var(int i, uint8_t k = 1) {
    Monomial m;
    m.e[i] = k;
    m.deg = k;
    return m;
  }

  bool is_one() const { return deg == 0; }

  bool divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  bool coprime(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }

  Monomial mul(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] + o.e[i];
    r.deg = deg + o.deg;
    return r;
  }

  // Requires o | this.
  Monomial div(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] - o.e[i];
    r.deg = deg - o.deg;
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    uint16_t d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
      d += r.e[i];
    }
    r.deg = d;
    return r;
  }

  // Support contained in {v} (constants qualify).
  bool univariate_in(int v) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (i != v && e[i]) return false;
    return true;
  }

  bool operator==(const Monomial& o) const {
    return deg == o.deg && e == o.e;
  }
};

// Three-way comparison in the given order; positive when a > b. Variable 0
// has the highest lex priority.
inline int mono_cmp(const Monomial& a, const Monomial& b, Order ord) {
  if (ord == Order::lex) {
    return std::memcmp(a.e.data(), b.e.data(), Monomial::kMaxVars);
  }
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (int i = Monomial::kMaxVars - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  return 0;
}

// Shared context for a family of polynomials: coefficient field, monomial
// order and variable count.
struct PolyCtx {
  SmallFp fp;
  Order order;
  int nvars;

  PolyCtx(uint64_t p, Order o, int v) : fp(p), order(o), nvars(v) {}
  bool compatible(const PolyCtx& o) const {
    return fp == o.fp && order == o.order && nvars == o.nvars;
  }
};

using PolyCtxPtr = std::shared_ptr<const PolyCtx>;

inline PolyCtxPtr make_poly_ctx(uint64_t p, Order order, int nvars) {
  if (nvars < 1 || nvars > Monomial::kMaxVars)
    throw std::invalid_argument("PolyCtx: bad variable count");
  return std::make_shared<const PolyCtx>(p, order, nvars);
}

struct Term {
  uint64_t c;  // Montgomery form, never zero
  Monomial m;
};

// Sparse multivariate polynomial: terms strictly descending in the context
// order, coefficients in Montgomery form, never zero.
class MPoly {
 public:
  explicit MPoly(PolyCtxPtr ctx) : ctx_(std::move(ctx)) {}

  static MPoly constant(const PolyCtxPtr& ctx, uint64_t plain);
  static MPoly variable(const PolyCtxPtr& ctx, int i);

  const PolyCtxPtr& ctx() const { return ctx_; }
  const SmallFp& fp() const { return ctx_->fp; }

  bool is_zero() const { return t_.empty(); }
  size_t nterms() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }

  const Term& lt() const { return t_.front(); }
  const Monomial& lm() const { return t_.front().m; }
  uint64_t lc() const { return t_.front().c; }

  unsigned degree() const;  // total degree, 0 for the zero polynomial

  bool is_constant() const { return t_.empty() || t_.front().m.is_one(); }
  // Support contained in {v}.
  bool univariate_in(int v) const;

  // Append a term with plain coefficient; terms may arrive in any order
  // and duplicates combine. Call finish() once after the last add.
  void add_term(uint64_t plain_coeff, const Monomial& m);
  void finish();

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;

  // this * c * m with c in Montgomery form.
  MPoly term_scaled(uint64_t c_mont, const Monomial& m) const;
  MPoly monic() const;

  // Evaluation at a point given in Montgomery form, result in Montgomery
  // form.
  uint64_t eval(std::span<const uint64_t> point_mont) const;

  // Dense coefficients c[0..deg] (plain form) of a polynomial univariate
  // in v.
  std::vector<uint64_t> dense_univariate(int v) const;

  bool operator==(const MPoly& o) const;

  std::string str() const;  // debugging aid: "3*x1^2*x24 + ..."

 private:
  friend MPoly sub_scaled(const MPoly& h, size_t head, const MPoly& g,
                          uint64_t c, const Monomial& shift);

  PolyCtxPtr ctx_;
  std::vector<Term> t_;
};

// h[head..] - c * shift * g, the reduction step primitive.
MPoly sub_scaled(const MPoly& h, size_t head, const MPoly& g, uint64_t c,
                 const Monomial& shift);

}  // namespace matkex
