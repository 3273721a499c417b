#include "doctest.h"

#include "oidforge/catalog.hpp"
#include "oidforge/construct.hpp"
#include "oidforge/errors.hpp"
#include "oidforge/isotropy.hpp"

using namespace oidforge;

namespace {

Poly P(const RingPtr& r, const char* s) { return Poly::parse(r, s); }

// Linear part of a vector field vanishing at the origin, as the d x d matrix d(X^a)/dx_b.
QVector jet1(const VectorField& X) {
  const int d = static_cast<int>(X.coeff().size());
  QVector out;
  QVector zero(static_cast<std::size_t>(d), Q(0));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) out.push_back(X[a].derivative(b).evaluate(zero));
  return out;
}

VectorField field_of(const LieInftyAlgebroid& alg, const QVector& v) {
  Element e;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (sgn(v[k]) != 0) add_term(e, Gen{1, static_cast<int>(k)}, Poly::constant(alg.ring(), v[k]));
  return alg.anchor(e);
}

// Structure constants of the linearized anchor image at the origin, computed from commutators of
// the vector fields rho(b_i). Requires the linearization to be injective on the basis.
void check_against_commutators(const LieInftyAlgebroid& alg, const IsotropyAlgebra& g) {
  const int n = g.dimension();
  std::vector<VectorField> V;
  std::vector<QVector> jets;
  for (const auto& b : g.basis) {
    V.push_back(field_of(alg, b));
    jets.push_back(jet1(V.back()));
  }
  const int rows = static_cast<int>(jets[0].size());
  REQUIRE(rank(from_columns(jets, rows)) == n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto c = solve(from_columns(jets, rows), jet1(commutator(V[i], V[j])));
      REQUIRE(c.has_value());
      CHECK(*c == g.structure[i][j]);
    }
}

LieInftyAlgebroid i0_plane() {
  auto r = Ring::make({"x", "y"});
  return build_all(free_resolution(vanishing_generators({P(r, "x"), P(r, "y")}), r));
}

}  // namespace

TEST_CASE("isotropy of I_0 X(Q^2) at the origin is gl_2") {
  LieInftyAlgebroid alg = i0_plane();
  IsotropyAlgebra g = isotropy_lie_algebra(alg, {Q(0), Q(0)});
  REQUIRE(g.dimension() == 4);
  CHECK(g.antisymmetric());
  CHECK(g.jacobi_holds());
  check_against_commutators(alg, g);
  // the centre is spanned by the Euler field x d_x + y d_y
  QVector euler = {Q(1), Q(0), Q(0), Q(1)};
  Specialization s = specialize(alg, {Q(0), Q(0)});
  QVector e = isotropy_coordinates(g, s, euler);
  for (int i = 0; i < 4; ++i) {
    QVector out(4, Q(0));
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) out[k] += e[j] * g.structure[j][i][k];
    CHECK(is_zero(out));
  }
  CHECK_FALSE(is_regular(alg, {Q(0), Q(0)}));
  CHECK(minimality_at(alg, {Q(0), Q(0)}).minimal);
}

TEST_CASE("regular points of I_0 X(Q^2)") {
  LieInftyAlgebroid alg = i0_plane();
  for (auto pt : {QVector{Q(1), Q(0)}, QVector{Q(2), Q(-3)}, QVector{Q(1, 2), Q(5)}}) {
    CHECK(is_regular(alg, pt));
    CHECK(isotropy_lie_algebra(alg, pt).dimension() == 0);
    CHECK_FALSE(minimality_at(alg, pt).minimal);
    Specialization s = specialize(alg, pt);
    CHECK(s.anchor_kernel.size() == 2);
    CHECK(s.kernel_closed);
  }
}

TEST_CASE("isotropy of Koszul foliations at the origin") {
  auto r = Ring::make({"x", "y", "z"});
  SUBCASE("quadric gives so(3)") {
    LieInftyAlgebroid alg = koszul_foliation(P(r, "x^2+y^2+z^2"));
    IsotropyAlgebra g = isotropy_lie_algebra(alg, {Q(0), Q(0), Q(0)});
    REQUIRE(g.dimension() == 3);
    CHECK(g.antisymmetric());
    CHECK(g.jacobi_holds());
    check_against_commutators(alg, g);
    // perfect: the brackets span the whole algebra
    std::vector<QVector> span;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) span.push_back(g.structure[i][j]);
    CHECK(rank(from_columns(span, 3)) == 3);
  }
  SUBCASE("cubic gives an abelian algebra") {
    LieInftyAlgebroid alg = koszul_foliation(P(r, "x^3+y^3+z^3"));
    IsotropyAlgebra g = isotropy_lie_algebra(alg, {Q(0), Q(0), Q(0)});
    REQUIRE(g.dimension() == 3);
    for (const auto& row : g.structure)
      for (const auto& v : row) CHECK(is_zero(v));
  }
  SUBCASE("away from the singular point") {
    LieInftyAlgebroid alg = koszul_foliation(P(r, "x^2+y^2+z^2"));
    QVector pt = {Q(1), Q(0), Q(0)};
    CHECK(is_regular(alg, pt));
    // the leaf through (1,0,0) is a sphere, so one bivector direction is killed by rho
    CHECK(specialize(alg, pt).anchor_kernel.size() == 1);
    CHECK(isotropy_lie_algebra(alg, pt).dimension() == 0);
  }
}

TEST_CASE("specialization needs a point of the base") {
  auto r = Ring::make({"x", "y", "z"});
  Poly phi = P(r, "x^2+y^2+z^2");
  LieInftyAlgebroid q = restrict_to(koszul_foliation(phi), {phi});
  CHECK_THROWS_AS(specialize(q, {Q(1), Q(0), Q(0)}), Error);
  CHECK_THROWS_AS(specialize(q, {Q(0), Q(0)}), Error);
  IsotropyAlgebra g = isotropy_lie_algebra(q, {Q(0), Q(0), Q(0)});
  CHECK(g.dimension() == 3);
  CHECK(g.jacobi_holds());
}
