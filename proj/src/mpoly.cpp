#include "matkex/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace matkex {

MPoly MPoly::constant(const PolyCtxPtr& ctx, uint64_t plain) {
  MPoly r(ctx);
  uint64_t c = ctx->fp.from_u64(plain);
  if (c) r.t_.push_back({c, Monomial::one()});
  return r;
}

MPoly MPoly::variable(const PolyCtxPtr& ctx, int i) {
  if (i < 0 || i >= ctx->nvars)
    throw std::invalid_argument("MPoly::variable: index out of range");
  MPoly r(ctx);
  r.t_.push_back({ctx->fp.one(), Monomial::var(i)});
  return r;
}

unsigned MPoly::degree() const {
  unsigned d = 0;
  for (const auto& t : t_) d = std::max<unsigned>(d, t.m.deg);
  return d;
}

bool MPoly::univariate_in(int v) const {
  for (const auto& t : t_)
    if (!t.m.univariate_in(v)) return false;
  return true;
}

void MPoly::add_term(uint64_t plain_coeff, const Monomial& m) {
  uint64_t c = ctx_->fp.from_u64(plain_coeff);
  if (c) t_.push_back({c, m});
}

void MPoly::finish() {
  Order ord = ctx_->order;
  std::sort(t_.begin(), t_.end(), [ord](const Term& a, const Term& b) {
    return mono_cmp(a.m, b.m, ord) > 0;
  });
  size_t out = 0;
  for (size_t i = 0; i < t_.size();) {
    Monomial m = t_[i].m;
    uint64_t c = t_[i].c;
    size_t j = i + 1;
    while (j < t_.size() && t_[j].m == m) c = ctx_->fp.add(c, t_[j++].c);
    if (c) t_[out++] = {c, m};
    i = j;
  }
  t_.resize(out);
}

namespace {

// Merge two descending term streams with coefficient combination.
std::vector<Term> merge(const SmallFp& fp, Order ord,
                        const std::vector<Term>& a, size_t ai,
                        const std::vector<Term>& b, uint64_t bc,
                        const Monomial* bshift, bool negate_b) {
  std::vector<Term> out;
  out.reserve((a.size() - ai) + b.size());
  size_t i = ai, j = 0;
  auto bterm = [&](size_t k) -> Term {
    Term t = b[k];
    if (bshift) t.m = t.m.mul(*bshift);
    t.c = fp.mul(t.c, bc);
    if (negate_b) t.c = fp.neg(t.c);
    return t;
  };
  while (i < a.size() && j < b.size()) {
    Term tb = bterm(j);
    int c = mono_cmp(a[i].m, tb.m, ord);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(tb);
      ++j;
    } else {
      uint64_t s = fp.add(a[i].c, tb.c);
      if (s) out.push_back({s, a[i].m});
      ++i;
      ++j;
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(bterm(j++));
  return out;
}

}  // namespace

MPoly MPoly::operator+(const MPoly& o) const {
  if (!ctx_->compatible(*o.ctx_))
    throw std::invalid_argument("MPoly: mixed contexts");
  MPoly r(ctx_);
  r.t_ = merge(ctx_->fp, ctx_->order, t_, 0, o.t_, ctx_->fp.one(), nullptr,
               false);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  if (!ctx_->compatible(*o.ctx_))
    throw std::invalid_argument("MPoly: mixed contexts");
  MPoly r(ctx_);
  r.t_ = merge(ctx_->fp, ctx_->order, t_, 0, o.t_, ctx_->fp.one(), nullptr,
               true);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  if (!ctx_->compatible(*o.ctx_))
    throw std::invalid_argument("MPoly: mixed contexts");
  MPoly r(ctx_);
  for (const auto& t : t_)
    r.t_ = merge(ctx_->fp, ctx_->order, r.t_, 0, o.t_, t.c, &t.m, false);
  return r;
}

MPoly MPoly::term_scaled(uint64_t c_mont, const Monomial& m) const {
  MPoly r(ctx_);
  if (!c_mont) return r;
  r.t_.reserve(t_.size());
  for (const auto& t : t_)
    r.t_.push_back({ctx_->fp.mul(t.c, c_mont), t.m.mul(m)});
  return r;
}

MPoly MPoly::monic() const {
  if (is_zero() || lc() == ctx_->fp.one()) return *this;
  return term_scaled(ctx_->fp.inv(lc()), Monomial::one());
}

uint64_t MPoly::eval(std::span<const uint64_t> point_mont) const {
  const SmallFp& fp = ctx_->fp;
  uint64_t acc = 0;
  for (const auto& t : t_) {
    uint64_t v = t.c;
    for (int i = 0; i < ctx_->nvars; ++i)
      for (int k = 0; k < t.m.e[i]; ++k) v = fp.mul(v, point_mont[i]);
    acc = fp.add(acc, v);
  }
  return acc;
}

std::vector<uint64_t> MPoly::dense_univariate(int v) const {
  if (!univariate_in(v))
    throw std::invalid_argument("dense_univariate: not univariate");
  std::vector<uint64_t> c(degree() + 1, 0);
  for (const auto& t : t_) c[t.m.e[v]] = ctx_->fp.to_u64(t.c);
  return c;
}

bool MPoly::operator==(const MPoly& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (size_t i = 0; i < t_.size(); ++i)
    if (!(t_[i].c == o.t_[i].c && t_[i].m == o.t_[i].m)) return false;
  return true;
}

std::string MPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : t_) {
    if (!first) os << " + ";
    first = false;
    os << ctx_->fp.to_u64(t.c);
    for (int i = 0; i < ctx_->nvars; ++i) {
      if (!t.m.e[i]) continue;
      os << "*x" << (i + 1);
      if (t.m.e[i] > 1) os << "^" << int(t.m.e[i]);
    }
  }
  return os.str();
}

MPoly sub_scaled(const MPoly& h, size_t head, const MPoly& g, uint64_t c,
                 const Monomial& shift) {
  MPoly r(h.ctx_);
  r.t_ = merge(h.ctx_->fp, h.ctx_->order, h.t_, head, g.t_, c, &shift, true);
  return r;
}

}  // namespace matkex
