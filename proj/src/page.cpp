#include "oidforge/page.hpp"

#include "oidforge/brackets.hpp"
#include "oidforge/errors.hpp"

namespace oidforge {

namespace {

Element augmented_d(const FreeResolution& res, const Element& v) {
  Element out;
  for (const auto& [g, c] : v) {
    if (g.level == 1) {
      const VectorField X = res.anchor_of(g.index);
      for (int a = 0; a < X.dim(); ++a) add_term(out, Gen{0, a}, c * X[a]);
    } else if (g.level >= 2 && g.level <= res.length()) {
      const FreeModuleMap& m = res.diffs[g.level - 2];
      for (int i = 0; i < m.rows(); ++i)
        if (!m.at(i, g.index).is_zero()) add_term(out, Gen{g.level - 1, i}, c * m.at(i, g.index));
    }
  }
  return out;
}

MapView plain_d(const FreeResolution& res) {
  MapView m;
  m.arity = 1;
  m.degree = 1;
  m.on_word = [&res](const Word& w) {
    const Gen& g = w[0];
    Element out;
    if (g.level >= 2 && g.level <= res.length())
      out = augmented_d(res, Element{{g, Poly::constant(res.ring, 1)}});
    return out;
  };
  return m;
}

int element_level(const Element& v) { return v.empty() ? -1 : v.begin()->first.level; }

}  // namespace

int output_level(const PageElement& p, const Word& w) { return -(word_degree(w) + p.shift); }

PageElement page_D(const PageElement& p, const FreeResolution& source, const FreeResolution& target) {
  PageElement out;
  out.arity = p.arity;
  out.shift = p.shift + 1;
  MapView pv = taylor_view(p);
  MapView dv = plain_d(source);
  const Q sign = (p.shift & 1) ? 1 : -1;
  for (const Word& w : window_words(source.ranks, p.arity, out.shift, 0, target.length())) {
    Element v = augmented_d(target, p.at(w));
    add_scaled(v, sign, compose(pv, dv, w));
    out.set(w, std::move(v));
  }
  return out;
}

PageElement page_D(const PageElement& p, const FreeResolution& res) { return page_D(p, res, res); }

PageElement page_sub(const PageElement& a, const PageElement& b) {
  PageElement out = a;
  for (const auto& [w, v] : b.values) {
    Element x = out.at(w);
    add_scaled(x, Q(-1), v);
    out.set(w, std::move(x));
  }
  return out;
}

bool page_equal(const PageElement& a, const PageElement& b) { return page_sub(a, b).empty(); }

PageSolver::PageSolver(const FreeResolution& source, const FreeResolution& target, std::uint64_t seed)
    : source_(source), target_(target), seed_(seed) {
  lifters_.resize(static_cast<std::size_t>(target.length()) + 1);
}

const Lifter* PageSolver::lifter(int level) const {
  // Lifts level-`level` values to level + 1.
  if (level + 1 > target_.length()) return nullptr;
  auto& slot = lifters_[level];
  if (!slot) slot = std::make_unique<Lifter>(level == 0 ? target_.anchor : target_.diffs[level - 1], seed_);
  return slot.get();
}

PageElement PageSolver::solve(const PageElement& p) const {
  PageElement r;
  r.arity = p.arity;
  r.shift = p.shift - 1;
  PageElement q = p;
  const RingPtr& ring = target_.ring;
  for (int m = 0; m <= target_.length(); ++m) {
    PageElement step;
    step.arity = p.arity;
    step.shift = r.shift;
    for (const auto& [w, v] : q.values) {
      if (element_level(v) != m) continue;
      const Lifter* lf = lifter(m);
      const int rank = m == 0 ? ring->nvars() : target_.rank(m);
      std::optional<ModVec> c;
      if (lf) c = lf->lift(element_vec(v, m, rank, ring));
      if (!c) throw LiftFailed(m, word_str(w) + " -> " + element_str(v));
      step.set(w, vec_element(*c, m + 1));
    }
    if (step.empty()) continue;
    q = page_sub(q, page_D(step, source_, target_));
    for (const auto& [w, v] : step.values) {
      Element x = r.at(w);
      add_scaled(x, Q(1), v);
      r.set(w, std::move(x));
    }
  }
  if (!q.empty()) {
    const auto& [w, v] = *q.values.begin();
    throw LiftFailed(element_level(v), "residual on " + word_str(w) + ": " + element_str(v));
  }
  return r;
}

PageElement page_solve(const PageElement& p, const FreeResolution& res, std::uint64_t seed) {
  return PageSolver(res, res, seed).solve(p);
}

}  // namespace oidforge
