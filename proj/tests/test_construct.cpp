#include "doctest.h"

#include "oidforge/brackets.hpp"
#include "oidforge/catalog.hpp"
#include "oidforge/construct.hpp"
#include "oidforge/errors.hpp"
#include "oidforge/page.hpp"

using namespace oidforge;

namespace {

Poly P(const RingPtr& r, const char* s) { return Poly::parse(r, s); }

std::size_t nonzero(const TaylorMap& t) {
  std::size_t n = 0;
  for (const auto& [w, v] : t.values)
    if (!v.empty()) ++n;
  return n;
}

}  // namespace

TEST_CASE("I_0 X(Q^2) is a Lie algebroid") {
  auto r = Ring::make({"x", "y"});
  auto res = free_resolution(vanishing_generators({P(r, "x"), P(r, "y")}), r);
  LieInftyAlgebroid alg = build_all(res);
  CHECK(alg.max_arity == 3);
  CHECK_FALSE(alg.partial);
  CHECK(alg.table(3).empty());
  CheckReport rep = check_algebroid(alg);
  CHECK_MESSAGE(rep.ok, rep.str());
  // l2 on generators is the commutator table: [x d_x, x d_y] = x d_y
  Element v = alg.table(2).at({Gen{1, 0}, Gen{1, 1}});
  CHECK(alg.anchor(v) == VectorField({P(r, "0"), P(r, "x")}));
}

TEST_CASE("higher brackets appear when the Jacobiator survives") {
  auto r = Ring::make({"x", "y", "z"});
  auto res = free_resolution(vanishing_generators({P(r, "x^2"), P(r, "y^2"), P(r, "z")}), r);
  LieInftyAlgebroid alg = build_all(res);
  CHECK(nonzero(alg.table(3)) > 0);
  CheckReport rep = check_algebroid(alg);
  CHECK_MESSAGE(rep.ok, rep.str());
}

TEST_CASE("I_0 X(Q^3)") {
  auto r = Ring::make({"x", "y", "z"});
  auto res = free_resolution(vanishing_generators({P(r, "x"), P(r, "y"), P(r, "z")}), r);
  CHECK(res.ranks == std::vector<int>{9, 9, 3});
  LieInftyAlgebroid alg = build_all(res);
  CheckReport rep = check_algebroid(alg);
  CHECK_MESSAGE(rep.ok, rep.str());
}

TEST_CASE("tangent fields of the cusp") {
  auto r = Ring::make({"x", "y"});
  auto res = free_resolution(tangent_generators({P(r, "y^2-x^3")}), r);
  LieInftyAlgebroid alg = build_all(res);
  CheckReport rep = check_algebroid(alg);
  CHECK_MESSAGE(rep.ok, rep.str());
}

TEST_CASE("seeds change the lifts but not validity") {
  auto r = Ring::make({"x", "y", "z"});
  auto res = free_resolution(vanishing_generators({P(r, "x^2"), P(r, "y^2"), P(r, "z")}), r);
  for (std::uint64_t seed : {1u, 5u, 7u}) {
    BuildOptions o;
    o.seed = seed;
    LieInftyAlgebroid alg = build_all(res, o);
    CheckReport rep = check_algebroid(alg);
    CHECK_MESSAGE(rep.ok, rep.str());
  }
}

TEST_CASE("partial construction") {
  auto r = Ring::make({"x", "y", "z"});
  auto res = free_resolution(vanishing_generators({P(r, "x^2"), P(r, "y^2"), P(r, "z")}), r);
  BuildOptions o;
  o.max_arity = 2;
  LieInftyAlgebroid alg = build_all(res, o);
  CHECK(alg.partial);
  CHECK(alg.table(3).empty());
  CHECK(check_algebroid(alg, 2).ok);
  // the arity-3 identity needs l3
  CHECK_FALSE(check_algebroid(alg, 3).ok);
}

TEST_CASE("vanishing of higher brackets on generator words") {
  auto r = Ring::make({"x", "y"});
  auto res = free_resolution(vanishing_generators({P(r, "x"), P(r, "y")}), r);
  BuildOptions o;
  o.expect_vanishing_on_generators = true;
  CHECK_NOTHROW(build_all(res, o));
}

TEST_CASE("construction errors") {
  auto r = Ring::make({"x", "y"});
  SUBCASE("module not closed under the bracket") {
    auto res = free_resolution({VectorField({P(r, "1"), P(r, "0")}), VectorField({P(r, "0"), P(r, "x")})}, r);
    try {
      build_binary(res);
      FAIL("expected a lift failure");
    } catch (const LiftFailed& e) {
      CHECK(e.level == 0);
    }
  }
  SUBCASE("differential outside the kernel of the anchor") {
    auto res = free_resolution(vanishing_generators({P(r, "x"), P(r, "y")}), r);
    res.diffs[0].at(0, 0) = P(r, "1");
    CHECK_THROWS_AS(build_binary(res), Error);
  }
}

TEST_CASE("Lie 2-algebroid data") {
  auto r = Ring::make({"x", "y", "z"});
  auto res = free_resolution(vanishing_generators({P(r, "x^2"), P(r, "y^2"), P(r, "z")}), r);
  REQUIRE(res.length() == 3);
  CHECK_THROWS_AS(build_lie2(res), Error);

  auto r2 = Ring::make({"x", "y"});
  auto res2 = free_resolution(vanishing_generators({P(r2, "x^2"), P(r2, "y")}), r2);
  REQUIRE(res2.length() == 2);
  Lie2Algebroid l = build_lie2(res2);
  CHECK_MESSAGE(l.axioms.ok, l.axioms.str());
  CHECK(nonzero(l.bracket) + nonzero(l.connection) == nonzero(l.alg.table(2)));
  for (const auto& [w, v] : l.bracket.values) CHECK(w[1].level == 1);
  for (const auto& [w, v] : l.connection.values) CHECK(w[1].level == 2);
}

TEST_CASE("rescaling by a function") {
  auto r = Ring::make({"x", "y"});
  auto res = free_resolution(vanishing_generators({P(r, "x"), P(r, "y")}), r);
  LieInftyAlgebroid alg = build_all(res);
  Poly chi = P(r, "x^2+y^2");
  LieInftyAlgebroid s = rescale(alg, chi);
  for (int j = 0; j < 4; ++j) CHECK(s.res.anchor_of(j) == chi * alg.res.anchor_of(j));
  CheckReport rep = check_algebroid(s);
  CHECK_MESSAGE(rep.ok, rep.str());

  auto r3 = Ring::make({"x", "y", "z"});
  auto res3 = free_resolution(vanishing_generators({P(r3, "x^2"), P(r3, "y^2"), P(r3, "z")}), r3);
  LieInftyAlgebroid big = rescale(build_all(res3), P(r3, "1+x*z"));
  rep = check_algebroid(big);
  CHECK_MESSAGE(rep.ok, rep.str());
  CHECK_THROWS_AS(rescale(alg, P(r3, "x")), RingMismatch);
}

TEST_CASE("restriction to an invariant ideal") {
  auto r = Ring::make({"x", "y", "z"});
  Poly phi = P(r, "x^2+y^2+z^2");
  LieInftyAlgebroid k = koszul_foliation(phi);
  LieInftyAlgebroid q = restrict_to(k, {phi});
  CHECK(q.ring()->is_quotient());
  CheckReport rep = check_algebroid(q);
  CHECK_MESSAGE(rep.ok, rep.str());
  CHECK(certify_exactness(q.res).verify(q.res));

  SUBCASE("the unit ideal gives the empty structure") {
    LieInftyAlgebroid z = restrict_to(k, {P(r, "1")});
    CHECK(z.ring()->is_zero_ring());
    CHECK(z.length() == 0);
    CHECK(z.brackets.empty());
  }
  SUBCASE("an ideal moved by the anchor") {
    auto r2 = Ring::make({"x", "y"});
    LieInftyAlgebroid plane = build_all(free_resolution({VectorField({P(r2, "1"), P(r2, "0")}),
                                                         VectorField({P(r2, "0"), P(r2, "1")})}, r2));
    CHECK(check_algebroid(plane).ok);
    CHECK_THROWS_AS(restrict_to(plane, {P(r2, "x")}), NotLieRinehartIdeal);
    LieInftyAlgebroid z = restrict_to(plane, {P(r2, "1")});
    CHECK(z.ring()->is_zero_ring());
  }
}
