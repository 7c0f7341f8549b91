#include "matkex/shape.hpp"

#include <algorithm>
#include <stdexcept>

#include "matkex/uniroots.hpp"

namespace matkex {

ShapeResult shape_solve(const std::vector<MPoly>& basis) {
  if (basis.empty()) return {};
  const PolyCtxPtr& ctx = basis.front().ctx();
  if (ctx->order != Order::lex)
    throw std::invalid_argument("shape_solve: lex basis required");
  const SmallFp& fp = ctx->fp;
  int v = ctx->nvars;
  int last = v - 1;

  ShapeResult out;

  // The unit ideal has no solutions but is a perfectly fine outcome.
  if (basis.size() == 1 && basis.front().is_constant() &&
      !basis.front().is_zero()) {
    out.status = ShapeStatus::ok;
    return out;
  }

  if (basis.size() != static_cast<size_t>(v)) return {};

  const MPoly* eliminant = nullptr;
  std::vector<const MPoly*> cofactor(v, nullptr);  // per leading variable
  for (const MPoly& g : basis) {
    if (g.is_zero()) return {};
    if (g.univariate_in(last)) {
      if (eliminant) return {};
      eliminant = &g;
      continue;
    }
    // x_i + f_i(x_last): leading monomial a bare variable, tail univariate
    // in the last variable.
    const Monomial& m = g.lm();
    if (m.deg != 1) return {};
    int i = 0;
    while (i < v && m.e[i] != 1) ++i;
    if (i >= last || cofactor[i]) return {};
    for (size_t t = 1; t < g.nterms(); ++t)
      if (!g.terms()[t].m.univariate_in(last)) return {};
    cofactor[i] = &g;
  }
  if (!eliminant || eliminant->degree() < 1) return {};
  for (int i = 0; i < last; ++i)
    if (!cofactor[i]) return {};

  out.status = ShapeStatus::ok;
  out.eliminant_degree = eliminant->degree();
  for (int i = 0; i < last; ++i) {
    unsigned d = 0;
    for (size_t t = 1; t < cofactor[i]->nterms(); ++t)
      d = std::max<unsigned>(d, cofactor[i]->terms()[t].m.deg);
    out.max_cofactor_degree = std::max(out.max_cofactor_degree, d);
  }

  std::vector<uint64_t> roots = univariate_roots(*eliminant, last);
  for (uint64_t r : roots) {
    std::vector<uint64_t> point_mont(v, 0);
    point_mont[last] = fp.from_u64(r);
    std::vector<uint64_t> sol(v, 0);
    sol[last] = r;
    for (int i = 0; i < last; ++i) {
      // x_i = -f_i(r); the cofactor evaluates to x_i + f_i(r), so feed it
      // x_i = 0 and negate.
      uint64_t fi = cofactor[i]->eval(point_mont);
      uint64_t xi = fp.neg(fi);
      sol[i] = fp.to_u64(xi);
      point_mont[i] = xi;
    }
    // Back-substitution must zero the entire basis; a root that fails the
    // check would indicate a non-radical eliminant interaction, so guard.
    bool good = true;
    for (const MPoly& g : basis)
      if (g.eval(point_mont) != 0) {
        good = false;
        break;
      }
    if (good) out.solutions.push_back(std::move(sol));
  }
  return out;
}

}  // namespace matkex
