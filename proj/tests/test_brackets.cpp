#include "doctest.h"

#include "oidforge/brackets.hpp"
#include "oidforge/construct.hpp"
#include "oidforge/errors.hpp"
#include "oidforge/page.hpp"
#include "support.hpp"

using namespace oidforge;
using oidforge::testing::random_map;
using oidforge::testing::Sampler;

namespace {

Poly P(const RingPtr& r, const char* s) { return Poly::parse(r, s); }

LieInftyAlgebroid i0_plane(const RingPtr& r) {
  return build_all(free_resolution(vanishing_generators({P(r, "x"), P(r, "y")}), r));
}

Element random_section(Sampler& s, const RingPtr& r, const std::vector<int>& ranks, int level) {
  return s.element(r, ranks, level, 2);
}

int parity(int level) { return level % 2; }

// Extends a degree-0 map given on E_{-1} to a chain map over the identity of the module.
TaylorMap chain_extension(const LieInftyAlgebroid& a, const LieInftyAlgebroid& b, const TaylorMap& level1) {
  PageElement d = page_D(level1, a.res, b.res);
  PageElement rest;
  rest.arity = 1;
  rest.shift = 1;
  for (const auto& [w, v] : d.values)
    if (w[0].level >= 2) rest.set(w, negate(v));
  TaylorMap out = level1;
  for (const auto& [w, v] : PageSolver(a.res, b.res).solve(rest).values) out.set(w, v);
  return out;
}

// Phi0 o l2 - l2'(Phi0, Phi0) on arity-2 words; Phi1 must satisfy D(Phi1) = this.
PageElement morphism_defect(const LieInftyAlgebroid& a, const LieInftyAlgebroid& b, const TaylorMap& phi0) {
  const RingPtr& r = a.ring();
  MapView p0 = taylor_view(phi0);
  PageElement defect;
  defect.arity = 2;
  defect.shift = 1;
  for (const Word& w : window_words(a.ranks(), 2, 1, 1, b.length())) {
    Element x = gen_element(r, w[0]), y = gen_element(r, w[1]);
    Element v = evaluate(p0, {eval_bracket(a, 2, {x, y})});
    add_scaled(v, Q(-1), eval_bracket(b, 2, {evaluate(p0, {x}), evaluate(p0, {y})}));
    defect.set(w, v);
  }
  return defect;
}

}  // namespace

TEST_CASE("l2 satisfies the Leibniz rule") {
  auto r = Ring::make({"x", "y"});
  LieInftyAlgebroid alg = i0_plane(r);
  Sampler s(2);
  for (int trial = 0; trial < 40; ++trial) {
    int i = s.uniform(0, 3), lv = s.uniform(1, 2);
    int j = s.uniform(0, alg.res.rank(lv) - 1);
    Gen x{1, i}, y{lv, j};
    Poly f = s.poly(r, 2, 2), g = s.poly(r, 2, 2);
    Element fx{{x, f}}, gy{{y, g}};
    if (f.is_zero() || g.is_zero()) continue;
    Element got = eval_bracket(alg, 2, {fx, gy});
    Element want;
    add_scaled(want, f * g, alg.table(2).at({x, y}));
    add_term(want, y, f * apply_vf(alg.res.anchor_of(i), g));
    if (lv == 1) add_term(want, x, -(g * apply_vf(alg.res.anchor_of(j), f)));
    CHECK(same_element(got, want));
  }
}

TEST_CASE("anchor intertwines l2 with the commutator on arbitrary sections") {
  auto r = Ring::make({"x", "y"});
  LieInftyAlgebroid alg = i0_plane(r);
  Sampler s(4);
  for (int trial = 0; trial < 40; ++trial) {
    Element a = random_section(s, r, alg.ranks(), 1), b = random_section(s, r, alg.ranks(), 1);
    VectorField lhs = alg.anchor(eval_bracket(alg, 2, {a, b}));
    CHECK(lhs == commutator(alg.anchor(a), alg.anchor(b)));
  }
}

TEST_CASE("brackets are graded symmetric") {
  auto r = Ring::make({"x", "y"});
  LieInftyAlgebroid alg = i0_plane(r);
  Sampler s(6);
  for (int trial = 0; trial < 40; ++trial) {
    int la = s.uniform(1, 2), lb = s.uniform(1, 2);
    Element a = random_section(s, r, alg.ranks(), la), b = random_section(s, r, alg.ranks(), lb);
    Element ab = eval_bracket(alg, 2, {a, b});
    Element ba = eval_bracket(alg, 2, {b, a});
    if (parity(la) && parity(lb)) ba = negate(ba);
    CHECK(same_element(ab, ba));
  }
  CHECK_THROWS_AS(eval_bracket(alg, 4, {Element{}, Element{}, Element{}, Element{}}), ArityError);
  CHECK_THROWS_AS(evaluate(bracket_view(alg, 2), {Element{}}), ArityError);
}

TEST_CASE("the Richardson-Nijenhuis bracket is a graded Lie bracket") {
  auto r = Ring::make({"x", "y"});
  std::vector<int> ranks = {2, 2, 1};
  Sampler s(8);
  for (int trial = 0; trial < 6; ++trial) {
    int ap = s.uniform(1, 2), aq = s.uniform(1, 2), ar = s.uniform(1, 2);
    int dp = s.uniform(0, 1), dq = s.uniform(0, 1), dr = s.uniform(0, 1);
    TaylorMap tp = random_map(s, r, ranks, ap, dp), tq = random_map(s, r, ranks, aq, dq),
              tr = random_map(s, r, ranks, ar, dr);
    MapView p = taylor_view(tp), q = taylor_view(tq), rr = taylor_view(tr);

    TaylorMap pq = rn_bracket(p, q, ranks), qp = rn_bracket(q, p, ranks);
    // antisymmetry: [P,Q] = -(-1)^{|P||Q|} [Q,P]
    TaylorMap qp_signed = qp;
    if (!((dp & dq) & 1))
      for (auto& [w, v] : qp_signed.values) v = negate(v);
    CHECK(page_equal(pq, qp_signed));

    TaylorMap qr = rn_bracket(q, rr, ranks), pr = rn_bracket(p, rr, ranks);
    TaylorMap lhs = rn_bracket(p, taylor_view(qr), ranks);
    TaylorMap t1 = rn_bracket(taylor_view(pq), rr, ranks);
    TaylorMap t2 = rn_bracket(q, taylor_view(pr), ranks);
    if ((dp & dq) & 1)
      for (auto& [w, v] : t2.values) v = negate(v);
    TaylorMap rhs = t1;
    for (const auto& [w, v] : t2.values) {
      Element x = rhs.at(w);
      add_scaled(x, Q(1), v);
      rhs.set(w, x);
    }
    CHECK(page_equal(lhs, rhs));
  }
}

TEST_CASE("the Page differential squares to zero") {
  auto r = Ring::make({"x", "y", "z"});
  auto res = free_resolution(vanishing_generators({P(r, "x^2"), P(r, "y^2"), P(r, "z")}), r);
  Sampler s(10);
  for (int trial = 0; trial < 20; ++trial) {
    int arity = s.uniform(1, 3), shift = s.uniform(0, 2);
    TaylorMap p = random_map(s, r, res.ranks, arity, shift, 0);
    CHECK(page_D(page_D(p, res), res).empty());
  }
}

TEST_CASE("page_solve inverts D on exact elements") {
  auto r = Ring::make({"x", "y"});
  auto res = free_resolution(vanishing_generators({P(r, "x"), P(r, "y")}), r);
  Sampler s(12);
  for (int trial = 0; trial < 20; ++trial) {
    int arity = s.uniform(1, 3);
    TaylorMap q = random_map(s, r, res.ranks, arity, 1);
    PageElement p = page_D(q, res);
    PageElement sol = page_solve(p, res, static_cast<std::uint64_t>(trial));
    CHECK(page_equal(page_D(sol, res), p));
  }
  // a non-closed element has no preimage
  PageElement bad;
  bad.arity = 1;
  bad.shift = 1;
  bad.set({Gen{1, 0}}, Element{{Gen{0, 0}, P(r, "1")}});
  CHECK_THROWS_AS(page_solve(bad, res), LiftFailed);
}

TEST_CASE("dropping the corrector breaks the Jacobi identity") {
  auto r = Ring::make({"x", "y"});
  LieInftyAlgebroid alg = build_binary(free_resolution(vanishing_generators({P(r, "x"), P(r, "y")}), r));
  CHECK(check_algebroid(alg, 2).ok);
  LieInftyAlgebroid cut = alg;
  TaylorMap& l2 = cut.mutable_table(2);
  std::size_t dropped = 0;
  for (auto it = l2.values.begin(); it != l2.values.end();)
    if (it->first.back().level >= 2) {
      it = l2.values.erase(it);
      ++dropped;
    } else {
      ++it;
    }
  REQUIRE(dropped > 0);
  CheckReport rep = check_algebroid(cut, 2);
  CHECK_FALSE(rep.ok);
  CHECK(rep.identity == "Jacobi n=2");
}

TEST_CASE("Jacobiator of a Lie algebroid vanishes on generators") {
  auto r = Ring::make({"x", "y"});
  LieInftyAlgebroid alg = i0_plane(r);
  TaylorMap j = jacobiator(alg);
  // l3 = 0 here, so l2 o l2 = -(l1 o l3 + l3 o l1) vanishes on E_{-1}
  for (const Word& w : enumerate_words(alg.ranks(), 3, -3)) CHECK(j.at(w).empty());

  LieInftyAlgebroid broken = alg;
  broken.mutable_table(2).set({Gen{1, 0}, Gen{1, 1}}, {});
  CHECK_THROWS_AS(jacobiator(broken), AnchorNotMorphism);
}

TEST_CASE("morphisms of Lie infinity-algebroids") {
  auto r = Ring::make({"x", "y"});
  auto gens = vanishing_generators({P(r, "x"), P(r, "y")});
  LieInftyAlgebroid a = build_all(free_resolution(gens, r));

  auto scalar = [&](const LieInftyAlgebroid& alg, int c) {
    TaylorMap t;
    t.arity = 1;
    for (int lv = 1; lv <= alg.length(); ++lv)
      for (int j = 0; j < alg.res.rank(lv); ++j)
        t.set({Gen{lv, j}}, Element{{Gen{lv, j}, Poly::constant(r, c)}});
    return t;
  };

  SUBCASE("identity") {
    MorphismTaylor m{&a, &a, {scalar(a, 1)}};
    CHECK(check_morphism(m, 1).ok);
  }
  SUBCASE("rescaling is not the identity") {
    LieInftyAlgebroid b = rescale(a, P(r, "x^2+y^2"));
    MorphismTaylor m{&a, &b, {scalar(a, 1)}};
    CheckReport rep = check_morphism(m, 1);
    CHECK_FALSE(rep.ok);
    CHECK(rep.identity == "rho o Phi0 = rho'");
  }
  SUBCASE("minus identity onto the negated generators") {
    std::vector<VectorField> neg;
    for (const auto& X : gens) neg.push_back(VectorField::zero(r) - X);
    LieInftyAlgebroid b = build_all(free_resolution(neg, r));
    TaylorMap phi0 = scalar(a, -1);
    TaylorMap phi1 = PageSolver(a.res, b.res).solve(morphism_defect(a, b, phi0));
    CHECK(check_morphism(MorphismTaylor{&a, &b, {phi0, phi1}}, 1).ok);
  }
  SUBCASE("polynomial change of generators") {
    // e'_0 is anchored at x d_x + x^2 d_y = X_0 + x X_1, so e_0 maps to e'_0 - x e'_1
    std::vector<VectorField> other = gens;
    other[0] = gens[0] + P(r, "x") * gens[1];
    LieInftyAlgebroid b = build_all(free_resolution(other, r));
    TaylorMap level1;
    level1.arity = 1;
    for (int j = 0; j < 4; ++j) {
      Element v{{Gen{1, j}, P(r, "1")}};
      if (j == 0) add_term(v, Gen{1, 1}, P(r, "-x"));
      level1.set({Gen{1, j}}, v);
    }
    TaylorMap phi0 = chain_extension(a, b, level1);
    TaylorMap phi1 = PageSolver(a.res, b.res).solve(morphism_defect(a, b, phi0));
    CHECK(check_morphism(MorphismTaylor{&a, &b, {phi0, phi1}}, 1).ok);
    REQUIRE_FALSE(phi1.empty());
    CheckReport rep = check_morphism(MorphismTaylor{&a, &b, {phi0}}, 1);
    CHECK_FALSE(rep.ok);
    CHECK(rep.identity == "morphism n=2");
  }
}
