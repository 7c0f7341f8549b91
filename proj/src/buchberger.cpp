#include "matkex/buchberger.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace matkex {

namespace {

// Division by the pool polynomials selected by `use`, searched in order.
MPoly nf(const MPoly& f, const std::vector<MPoly>& pool,
         const std::vector<int>& use, uint64_t* steps) {
  const PolyCtx& ctx = *f.ctx();
  MPoly h = f;
  size_t head = 0;
  std::vector<Term> kept;

  while (head < h.nterms()) {
    const Term& t = h.terms()[head];
    const MPoly* reducer = nullptr;
    for (int gi : use) {
      const MPoly& g = pool[gi];
      if (g.lm().divides(t.m)) {
        reducer = &g;
        break;
      }
    }
    if (!reducer) {
      kept.push_back(t);
      ++head;
      continue;
    }
    uint64_t c = t.c;
    if (reducer->lc() != ctx.fp.one())
      c = ctx.fp.mul(c, ctx.fp.inv(reducer->lc()));
    h = sub_scaled(h, head, *reducer, c, t.m.div(reducer->lm()));
    head = 0;
    if (steps) ++*steps;
  }

  MPoly res(f.ctx());
  for (const Term& t : kept) res.add_term(ctx.fp.to_u64(t.c), t.m);
  res.finish();
  return res;
}

struct Pair {
  int i, j;  // i < j, indices into the basis array
  Monomial lcm;
};

struct PairOrder {
  Order ord;
  bool operator()(const Pair& a, const Pair& b) const {
    int c = mono_cmp(a.lcm, b.lcm, ord);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }
};

class Engine {
 public:
  Engine(const PolyCtxPtr& ctx, const GbOptions& opt)
      : ctx_(ctx), opt_(opt), queue_(PairOrder{ctx->order}) {}

  GbResult run(const std::vector<MPoly>& gens);

 private:
  void update(const MPoly& h);
  bool budget_left() const {
    return stats_.pairs_popped < opt_.max_pairs &&
           stats_.steps < opt_.max_steps;
  }
  std::vector<MPoly> alive_polys() const {
    std::vector<MPoly> g;
    for (int k : active_) g.push_back(basis_[k]);
    return g;
  }

  PolyCtxPtr ctx_;
  GbOptions opt_;
  std::vector<MPoly> basis_;
  std::vector<bool> alive_;
  std::vector<int> active_;  // alive indices, ascending
  std::multiset<Pair, PairOrder> queue_;
  GbStats stats_;
};

// Gebauer-Moller update: build the pairs of h against the live basis,
// discard the ones the lcm-divisibility and coprimality criteria certify
// as redundant, and prune old pairs strictly dominated by the new head.
void Engine::update(const MPoly& h) {
  int t = static_cast<int>(basis_.size());
  const Monomial& hm = h.lm();

  struct Cand {
    int i;
    Monomial lcm;
    bool coprime;
    bool kept = false;
  };
  std::vector<Cand> cand;
  for (int i : active_)
    cand.push_back(
        {i, Monomial::lcm(basis_[i].lm(), hm), basis_[i].lm().coprime(hm)});

  for (size_t a = 0; a < cand.size(); ++a) {
    bool drop = false;
    if (!cand[a].coprime) {
      for (size_t b = 0; b < cand.size() && !drop; ++b) {
        if (a == b) continue;
        bool considered = (b > a) || cand[b].kept;
        if (!considered) continue;
        if (cand[b].lcm == cand[a].lcm) {
          if (b < a) drop = true;  // one representative per lcm
        } else if (cand[b].lcm.divides(cand[a].lcm)) {
          drop = true;
        }
      }
    }
    cand[a].kept = !drop;
  }

  // Prune old pairs whose lcm the new head strictly dominates.
  for (auto it = queue_.begin(); it != queue_.end();) {
    const Pair& p = *it;
    bool prune = hm.divides(p.lcm) &&
                 !(Monomial::lcm(basis_[p.i].lm(), hm) == p.lcm) &&
                 !(Monomial::lcm(basis_[p.j].lm(), hm) == p.lcm);
    it = prune ? queue_.erase(it) : std::next(it);
  }

  // Coprime heads (Buchberger's first criterion) never enter the queue.
  for (const auto& k : cand) {
    if (!k.kept || k.coprime) continue;
    queue_.insert(Pair{k.i, t, k.lcm});
    ++stats_.pairs_generated;
  }

  for (int i : active_)
    if (hm.divides(basis_[i].lm())) alive_[i] = false;
  basis_.push_back(h);
  alive_.push_back(true);
  active_.clear();
  for (int i = 0; i < t + 1; ++i)
    if (alive_[i]) active_.push_back(i);
}

GbResult Engine::run(const std::vector<MPoly>& gens) {
  for (const MPoly& g : gens) {
    if (g.is_zero()) continue;
    MPoly r = nf(g, basis_, active_, &stats_.steps);
    if (r.is_zero()) continue;
    stats_.max_degree = std::max(stats_.max_degree, r.degree());
    update(r.monic());
  }

  while (!queue_.empty()) {
    if (!budget_left()) {
      GbResult out{GbStatus::budget_exhausted, alive_polys(), stats_};
      out.stats.basis_size = out.basis.size();
      return out;
    }
    Pair p = *queue_.begin();
    queue_.erase(queue_.begin());
    ++stats_.pairs_popped;
    MPoly s = spoly(basis_[p.i], basis_[p.j]);
    MPoly r = nf(s, basis_, active_, &stats_.steps);
    if (r.is_zero()) {
      ++stats_.zero_reductions;
      continue;
    }
    stats_.max_degree = std::max(stats_.max_degree, r.degree());
    update(r.monic());
  }

  // The live heads form a minimal basis; inter-reduce tails until stable
  // for the unique reduced basis.
  std::vector<MPoly> g = alive_polys();
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < g.size(); ++i) {
      std::vector<int> others;
      for (size_t j = 0; j < g.size(); ++j)
        if (j != i) others.push_back(static_cast<int>(j));
      MPoly r = nf(g[i], g, others, &stats_.steps);
      if (!(r == g[i])) {
        changed = true;
        if (r.is_zero()) {
          g.erase(g.begin() + i);
          --i;
        } else {
          g[i] = r.monic();
        }
      }
    }
  }
  Order ord = ctx_->order;
  std::sort(g.begin(), g.end(), [ord](const MPoly& a, const MPoly& b) {
    return mono_cmp(a.lm(), b.lm(), ord) > 0;
  });

  GbResult out{GbStatus::ok, std::move(g), stats_};
  out.stats.basis_size = out.basis.size();
  return out;
}

}  // namespace

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& gens,
                  uint64_t* steps) {
  std::vector<int> use;
  for (size_t i = 0; i < gens.size(); ++i)
    if (!gens[i].is_zero()) use.push_back(static_cast<int>(i));
  return nf(f, gens, use, steps);
}

MPoly spoly(const MPoly& f, const MPoly& g) {
  const PolyCtx& ctx = *f.ctx();
  Monomial l = Monomial::lcm(f.lm(), g.lm());
  MPoly a = f.term_scaled(ctx.fp.inv(f.lc()), l.div(f.lm()));
  MPoly b = g.term_scaled(ctx.fp.inv(g.lc()), l.div(g.lm()));
  return a - b;
}

GbResult buchberger(const std::vector<MPoly>& gens, const GbOptions& opt) {
  if (gens.empty()) return {};
  for (const MPoly& g : gens)
    if (!g.ctx()->compatible(*gens.front().ctx()))
      throw std::invalid_argument("buchberger: mixed contexts");
  Engine eng(gens.front().ctx(), opt);
  return eng.run(gens);
}

bool verify_groebner(const std::vector<MPoly>& basis,
                     const std::vector<MPoly>& gens) {
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j)
      if (!normal_form(spoly(basis[i], basis[j]), basis).is_zero())
        return false;
  for (const MPoly& g : gens)
    if (!normal_form(g, basis).is_zero()) return false;
  return true;
}

}  // namespace matkex
