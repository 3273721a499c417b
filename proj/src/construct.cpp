#include "oidforge/construct.hpp"

#include "oidforge/errors.hpp"

namespace oidforge {

namespace {

void require_closed(const PageElement& p, const FreeResolution& res, int n) {
  PageElement dp = page_D(p, res);
  if (!dp.empty()) {
    const auto& [w, v] = *dp.values.begin();
    throw ClosednessViolated(n, word_str(w) + " -> " + element_str(v));
  }
}

void add_into(TaylorMap& t, const TaylorMap& s) {
  for (const auto& [w, v] : s.values) {
    Element x = t.at(w);
    add_scaled(x, Q(1), v);
    t.set(w, std::move(x));
  }
}

TaylorMap map_table(const TaylorMap& t, const std::function<Poly(const Poly&)>& f) {
  TaylorMap out;
  out.arity = t.arity;
  out.shift = t.shift;
  for (const auto& [w, v] : t.values) {
    Element x;
    for (const auto& [g, c] : v) add_term(x, g, f(c));
    out.set(w, std::move(x));
  }
  return out;
}

FreeModuleMap map_matrix(const FreeModuleMap& m, const std::function<Poly(const Poly&)>& f,
                         const RingPtr& r) {
  std::vector<ModVec> cols;
  for (int j = 0; j < m.cols(); ++j) {
    ModVec c = m.column(j);
    for (auto& p : c) p = f(p);
    cols.push_back(std::move(c));
  }
  FreeModuleMap out = cols.empty() ? FreeModuleMap(r, m.rows(), 0) : FreeModuleMap::from_columns(r, m.rows(), cols);
  out.source_level = m.source_level;
  out.target_level = m.target_level;
  return out;
}

}  // namespace

LieInftyAlgebroid build_binary(const FreeResolution& res) {
  LieInftyAlgebroid alg;
  alg.res = res;
  alg.max_arity = std::max(1, std::min(2, alg.arity_bound()));
  const RingPtr& ring = res.ring;
  const int r1 = res.rank(1);
  if (r1 == 0) return alg;

  // Naive bracket from the structure functions u^k_ij = (u_ij - u_ji) / 2.
  TaylorMap& l2 = alg.mutable_table(2);
  Lifter anchor_lift(res.anchor);
  for (int i = 0; i < r1; ++i)
    for (int j = i + 1; j < r1; ++j) {
      VectorField X = commutator(res.anchor_of(i), res.anchor_of(j));
      VectorField Y = commutator(res.anchor_of(j), res.anchor_of(i));
      auto a = anchor_lift.lift(X.coeff());
      auto b = anchor_lift.lift(Y.coeff());
      if (!a || !b)
        throw LiftFailed(0, "[" + gen_name(1, i) + "," + gen_name(1, j) + "] = " + X.str() +
                                " is not in the generated module");
      ModVec u = scale(Poly::constant(ring, Q(1, 2)), sub(*a, *b));
      l2.set({Gen{1, i}, Gen{1, j}}, vec_element(u, 1));
    }
  if (res.length() < 2) return alg;

  // Corrector: D(tau2) = -[d, naive l2].
  MapView d = differential_view(alg);
  MapView naive = bracket_view(alg, 2);
  PageElement p;
  p.arity = 2;
  p.shift = 2;
  for (const Word& w : window_words(res.ranks, 2, 2, 1, res.length())) {
    Element v = compose(d, naive, w);
    add_scaled(v, Q(1), compose(naive, d, w));
    p.set(w, negate(v));
  }
  require_closed(p, res, 2);
  add_into(l2, page_solve(p, res, 0));
  return alg;
}

LieInftyAlgebroid build_all(const FreeResolution& res, const BuildOptions& opts) {
  LieInftyAlgebroid alg = build_binary(res);
  const int K = alg.arity_bound();
  const int cap = opts.max_arity < 0 ? K : std::min(opts.max_arity, K);
  if (cap < 2 && opts.max_arity >= 0) alg.brackets.clear();
  alg.max_arity = cap;
  alg.partial = cap < K;
  PageSolver solver(res, res, opts.seed);
  const int L = res.length();
  for (int n = 2; n + 1 <= cap; ++n) {
    std::vector<MapView> views(static_cast<std::size_t>(n) + 1);
    for (int k = 2; k <= n; ++k) views[k] = bracket_view(alg, k);
    PageElement p;
    p.arity = n + 1;
    p.shift = 2;
    for (const Word& w : window_words(res.ranks, n + 1, 2, 1, L)) {
      Element v;
      for (int i = 2; i <= n; ++i) {
        int j = n + 2 - i;
        if (alg.table(i).empty() || alg.table(j).empty()) continue;
        add_scaled(v, Q(-1), compose(views[j], views[i], w));
      }
      p.set(w, std::move(v));
    }
    require_closed(p, res, n);
    TaylorMap& t = alg.mutable_table(n + 1);
    t = solver.solve(p);
    t.arity = n + 1;
    t.shift = 1;
  }
  if (opts.expect_vanishing_on_generators)
    for (const auto& [k, t] : alg.brackets) {
      if (k < 3) continue;
      for (const auto& [w, v] : t.values)
        if (w.back().level == 1)
          throw Error("l" + std::to_string(k) + " nonzero on " + word_str(w) +
                      " although generator words were expected to vanish");
    }
  return alg;
}

Lie2Algebroid build_lie2(const FreeResolution& res, std::uint64_t seed) {
  if (res.length() != 2) throw Error("Lie-2 construction needs a resolution of length 2");
  Lie2Algebroid out;
  BuildOptions opts;
  opts.seed = seed;
  out.alg = build_all(res, opts);
  const TaylorMap& l2 = out.alg.table(2);
  out.bracket.arity = out.connection.arity = 2;
  out.bracket.shift = out.connection.shift = 1;
  for (const auto& [w, v] : l2.values) (w[1].level == 1 ? out.bracket : out.connection).set(w, v);
  out.bracket3 = out.alg.table(3);
  out.axioms = check_algebroid(out.alg, 3);
  return out;
}

LieInftyAlgebroid rescale(const LieInftyAlgebroid& alg, const Poly& chi) {
  if (!same_ring(chi.ring(), alg.ring()) && !chi.is_zero()) throw RingMismatch();
  const RingPtr& ring = alg.ring();
  LieInftyAlgebroid out = alg;
  out.res.anchor = map_matrix(alg.res.anchor, [&](const Poly& p) { return chi * p; }, ring);

  // l2' = chi l2 + rho(x)[chi] y + (-1)^{|x||y|} rho(y)[chi] x
  TaylorMap& l2 = out.mutable_table(2);
  l2 = map_table(alg.table(2), [&](const Poly& p) { return chi * p; });
  l2.arity = 2;
  l2.shift = 1;
  for (const Word& w : window_words(alg.ranks(), 2, 1, 1, alg.length())) {
    Element v = l2.at(w);
    const Gen& x = w[0];
    const Gen& y = w[1];
    if (x.level == 1) add_term(v, y, apply_vf(alg.res.anchor_of(x.index), chi));
    if (y.level == 1) {
      Poly t = apply_vf(alg.res.anchor_of(y.index), chi);
      add_term(v, x, x.odd() ? -t : t);
    }
    l2.set(w, std::move(v));
  }
  for (auto& [k, t] : out.brackets) {
    if (k < 3) continue;
    Poly f = Poly::constant(ring, 1);
    for (int i = 1; i < k; ++i) f = f * chi;
    t = map_table(alg.table(k), [&](const Poly& p) { return f * p; });
  }
  return out;
}

LieInftyAlgebroid restrict_to(const LieInftyAlgebroid& alg, const std::vector<Poly>& ideal) {
  const RingPtr& ring = alg.ring();
  RingPtr qr = Ring::quotient(ring, ideal);
  auto reduce = [&](const Poly& p) { return p.lift().in_ring(qr); };
  for (const auto& g : ideal) {
    for (int j = 0; j < alg.res.rank(1); ++j) {
      Poly v = apply_vf(alg.res.anchor_of(j), g);
      if (!reduce(v).is_zero())
        throw NotLieRinehartIdeal(alg.res.anchor_of(j).str() + " applied to " + g.str() + " gives " +
                                  v.str());
    }
  }
  LieInftyAlgebroid out;
  out.res.ring = qr;
  if (qr->is_zero_ring()) {
    out.res.anchor = FreeModuleMap(qr, qr->nvars(), 0);
    out.res.anchor.target_level = 0;
    out.res.anchor.source_level = 1;
    return out;
  }
  out.res.ranks = alg.res.ranks;
  out.res.anchor = map_matrix(alg.res.anchor, reduce, qr);
  for (const auto& m : alg.res.diffs) out.res.diffs.push_back(map_matrix(m, reduce, qr));
  for (const auto& [k, t] : alg.brackets) out.brackets[k] = map_table(t, reduce);
  out.max_arity = alg.max_arity;
  out.partial = alg.partial;
  return out;
}

}  // namespace oidforge
