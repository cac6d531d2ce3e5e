#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibra/expr.hpp"
#include "fibra/poly.hpp"

using namespace fibra;

static FieldPtr Q() { return NumberField::rationals(); }

static BiPoly P(const std::string& s) { return parse_affine_expr(s, Q()); }

TEST_CASE("resultants match hand Sylvester computations") {
  // Res_y(x - y, x*y - 1) = x^2 - 1
  UPoly r = resultant_y(P("x-y"), P("x*y-1"));
  UPoly expect(Q(), {FE::of(Q(), Rat(-1)), FE::zero(Q()), FE::of(Q(), Rat(1))});
  CHECK(r == expect);
  // Res_y(x - y, x + y) has zero set {x = 0} (sign is conventional)
  UPoly r2 = resultant_y(P("x-y"), P("x+y"));
  CHECK(r2.deg() == 1);
  CHECK(up_eval(r2, FE::zero(Q())).is_zero());
  CHECK(up_order_at(r2, FE::zero(Q())) == 1);
  // Res of a polynomial with itself vanishes (common factor)
  UPoly r3 = resultant_y(P("x*y-1"), P("x*y-1"));
  CHECK(r3.is_zero());
  CHECK_THROWS_WITH_AS(resultant_y(BiPoly(Q()), P("x")), doctest::Contains("ZeroInput"),
                       Error);
}

TEST_CASE("bivariate gcd and squarefree") {
  BiPoly p = P("(x-y)^2");
  BiPoly q = P("x-y");
  BiPoly g = bp_gcd(p, q);
  CHECK(g == bp_normalized(q));
  CHECK(!bp_squarefree(p));
  CHECK(bp_squarefree(q));
  // coprime pair
  CHECK(bp_gcd(P("x"), P("y")).is_constant());
  // gcd with zero returns the other argument (normalized)
  CHECK(bp_gcd(BiPoly(Q()), P("2x")) == bp_normalized(P("2x")));
}

TEST_CASE("expression parser") {
  CHECK(P("xy=1") == P("x*y - 1"));
  CHECK(P("x=y") == P("x - y"));
  CHECK(P("2(x+1)(x-1)") == P("2x^2-2"));
  CHECK(P("3/2x") == P("3/2 * x"));  // rational literal times variable
  CHECK_THROWS_WITH_AS(P("x +* y"), doctest::Contains("ParseError"), Error);
  CHECK_THROWS_WITH_AS(P("x = y = 1"), doctest::Contains("ParseError"), Error);
  CHECK(P("x - x").is_zero());  // zero is representable; curves reject it
  // the quartic-field generator appears as a coefficient
  auto K = NumberField::make(RatPoly({Rat(1), Rat(0), Rat(1)}));
  BiPoly f = parse_affine_expr("x - t", K);
  CHECK(f.coeff(0, 0) == -FE::gen(K));
}

TEST_CASE("parser round-trip with dehomogenization") {
  // parse, then check the affine polynomial reproduces the input normal form
  BiPoly f = P("x^2y - 3x + 1/2");
  BiPoly g = P("1/2 + x^2y - 3x");
  CHECK(f == g);
}

TEST_CASE("univariate utilities") {
  // order at a root
  BiPoly f = P("(x-1)^3 y + (x-1)^4");
  UPoly u = f.eval_y(FE::of(Q(), Rat(2)));
  CHECK(up_order_at(u, FE::one(Q())) == 3);
  // squarefree decomposition of (x-1)^2 (x+2)
  BiPoly g = P("(x-1)^2 (x+2)");
  auto dec = up_squarefree_decomposition(g.eval_y(FE::zero(Q())));
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].second == 1);
  CHECK(dec[1].second == 2);
}
