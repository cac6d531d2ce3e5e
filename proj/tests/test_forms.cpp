#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fibra/forms.hpp"

using namespace fibra;

static FieldPtr Q() { return NumberField::rationals(); }

TEST_CASE("bihomogenization bookkeeping") {
  // "xy=1" on P1xP1 with bidegree (1,1): affine terms xy - 1
  Form c3 = parse_and_homogenize("xy=1", BaseSurface::P1xP1, Q(), 1, 1);
  CHECK(c3.affine() == parse_affine_expr("x*y-1", Q()));
  // "x=y" -> x - y
  Form c1 = parse_and_homogenize("x=y", BaseSurface::P1xP1, Q(), 1, 1);
  CHECK(c1.affine() == parse_affine_expr("x-y", Q()));
  // declared degree too small
  CHECK_THROWS_WITH_AS(parse_and_homogenize("x^2=y", BaseSurface::P1xP1, Q(), 1, 1),
                       doctest::Contains("DegreeOverflow"), Error);
  // bihomogeneity: f(lu0, lu1, v0, v1) = l^a f: check via chart polys' degrees
  CHECK(c3.chart_poly(0).deg_x() <= 1);
  CHECK(c3.chart_poly(3) == parse_affine_expr("1 - x*y", Q()));  // both charts flip
}

TEST_CASE("points, charts and canonical form") {
  auto K = Q();
  SurfPoint p = SurfPoint::p1xp1_xy(K, FE::of(K, Rat(2)), std::nullopt);  // (2, inf)
  CHECK(p.str() == "(2, inf)");
  SurfPoint q = SurfPoint::p1xp1(K, FE::of(K, Rat(3)), FE::of(K, Rat(6)), FE::of(K, Rat(5)),
                                 FE::of(K, Rat(0)));
  CHECK(q.str() == "(2, 0)");
  CHECK(SurfPoint::p2(K, FE::of(K, Rat(0)), FE::of(K, Rat(2)), FE::of(K, Rat(0))).str() ==
        "(0 : 1 : 0)");
}

TEST_CASE("multiplicities at points incl. infinity") {
  auto K = Q();
  // C3 of the (1,1)-family: xy = 1 misses (0,0)
  Form c3 = Form::parse("xy=1", BaseSurface::P1xP1, K, 1, 1);
  CHECK(mult_at(c3, SurfPoint::p1xp1_xy(K, FE::zero(K), FE::zero(K))) == 0);
  // passes (0, inf) with multiplicity 1
  CHECK(mult_at(c3, SurfPoint::p1xp1_xy(K, FE::zero(K), std::nullopt)) == 1);
  // fiber at infinity: u0, vanishing along x = inf
  Form finf = Form::fiber(K, 0, std::nullopt);
  CHECK(mult_at(finf, SurfPoint::p1xp1_xy(K, std::nullopt, FE::zero(K))) == 1);
  CHECK(mult_at(finf, SurfPoint::p1xp1_xy(K, FE::zero(K), FE::zero(K))) == 0);
  // P2: cusp y^2 = x^3 at origin has multiplicity 2
  Form cusp = Form::parse("y^2 = x^3", BaseSurface::P2, K, 3, 0);
  CHECK(mult_at(cusp, SurfPoint::p2_affine(K, FE::zero(K), FE::zero(K))) == 2);
}

TEST_CASE("multiplicity is chart independent") {
  auto K = Q();
  // the point (1,1) is visible in all four charts; f = x - y has mult 1 there
  Form f = Form::parse("x=y", BaseSurface::P1xP1, K, 1, 1);
  SurfPoint p = SurfPoint::p1xp1_xy(K, FE::one(K), FE::one(K));
  for (int chart = 0; chart < 4; ++chart) {
    auto xy = Form::coords_in_chart(p, chart);
    REQUIRE(xy.has_value());
    BiPoly loc = f.chart_poly(chart).translate(xy->first, xy->second);
    CHECK(loc.min_total_deg() == 1);
  }
}

TEST_CASE("strict transform at infinitely near points") {
  auto K = Q();
  // cusp y^2 - x^3: blow up once at origin in direction (1:0): strict y'^2 - s
  // wait: f(s, sw)/s^2 = w^2 - s; at the direction point (0:0) it is smooth,
  // multiplicity 1
  Form cusp = Form::parse("y^2 - x^3", BaseSurface::P2, K, 3, 0);
  SurfPoint o = SurfPoint::p2_affine(K, FE::zero(K), FE::zero(K));
  SurfPoint q = SurfPoint::infinitely_near(o, FE::one(K), FE::zero(K));
  CHECK(mult_at(cusp, q) == 1);
  // tacnode y^2 - x^4: strict transform w^2 - s^2 has a node on the exceptional
  Form tac = Form::parse("y^2 - x^4", BaseSurface::P2, K, 4, 0);
  CHECK(mult_at(tac, SurfPoint::infinitely_near(o, FE::one(K), FE::zero(K))) == 2);
}

TEST_CASE("squarefree_and_gcd on forms") {
  auto K = Q();
  Form p = Form::parse("(x-y)^2", BaseSurface::P1xP1, K, 2, 2);
  Form q = Form::parse("x-y", BaseSurface::P1xP1, K, 1, 1);
  GcdResult g = squarefree_and_gcd(p, &q);
  CHECK(g.gcd_affine == bp_normalized(q.affine()));
  CHECK(!g.is_squarefree_p);
  GcdResult g2 = squarefree_and_gcd(q);
  CHECK(g2.is_squarefree_p);
  // coprime pair (x, y)
  Form fx = Form::parse("x", BaseSurface::P1xP1, K, 1, 0);
  Form fy = Form::parse("y", BaseSurface::P1xP1, K, 0, 1);
  CHECK(squarefree_and_gcd(fx, &fy).gcd_affine.is_constant());
  // shared infinity line: two (2,0)-forms with x-degree 1
  Form a = Form::from_affine(BaseSurface::P1xP1, parse_affine_expr("x", K), 2, 0);
  Form b = Form::from_affine(BaseSurface::P1xP1, parse_affine_expr("x-1", K), 2, 0);
  CHECK(a.has_common_component(b));  // both contain the x = inf fiber
}

TEST_CASE("binary form factorization over the field") {
  auto K = Q();
  // (x - y)(x + y) x: three distinct lines
  BiPoly cone = parse_affine_expr("(x-y)(x+y)x", K);
  auto fs = factor_binary_form(cone);
  int dirs = 0;
  for (auto& f : fs) dirs += f.directions();
  CHECK(dirs == 3);
  // x^2 + y^2 over Q: irreducible quadratic, two conjugate directions
  auto fs2 = factor_binary_form(parse_affine_expr("x^2+y^2", K));
  REQUIRE(fs2.size() == 1);
  CHECK(fs2[0].kind == ConeFactor::Kind::IrreducibleQuadratic);
  CHECK(fs2[0].directions() == 2);
  // over Q(i) the same form splits
  auto Ki = NumberField::make(RatPoly({Rat(1), Rat(0), Rat(1)}));
  auto fs3 = factor_binary_form(parse_affine_expr("x^2+y^2", Ki));
  CHECK(fs3.size() == 2);
  // triple line
  auto fs4 = factor_binary_form(parse_affine_expr("(2x-y)^3", K));
  REQUIRE(fs4.size() == 1);
  CHECK(fs4[0].mult == 3);
  // an irreducible cubic cone cannot be split
  CHECK_THROWS_WITH_AS(factor_binary_form(parse_affine_expr("x^3+x y^2 + y^3", K)),
                       doctest::Contains("UnsplitTangentCone"), Error);
}

TEST_CASE("bihomogeneity property under scaling") {
  // random lambda: F(l*u0, l*u1, v0, v1) = l^a F: equivalent statement on the
  // terms map: every term has u-weight a. Verified structurally: chart polys
  // of pure forms have bounded degrees.
  auto K = Q();
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int it = 0; it < 10; ++it) {
    BiPoly f(K);
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; j <= 1; ++j) f.set_coeff(i, j, FE::of(K, Rat(c(rng))));
    if (f.is_zero()) continue;
    Form F = Form::from_affine(BaseSurface::P1xP1, f, 2, 1);
    for (int chart = 0; chart < 4; ++chart) {
      CHECK(F.chart_poly(chart).deg_x() <= 2);
      CHECK(F.chart_poly(chart).deg_y() <= 1);
    }
  }
}
