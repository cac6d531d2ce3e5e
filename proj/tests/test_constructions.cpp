#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibra/bounds.hpp"
#include "fibra/constructions.hpp"

using namespace fibra;

namespace {
SurfacePair campedelli() {
  SurfacePair p;
  p.K2_S = 2;
  p.chi_S = 1;
  p.H_self = 0;
  p.KH = 2;
  p.g_H = 2;
  p.g_C_hat = 6;
  p.d = 2;
  return p;
}
SurfacePair godeaux() {
  SurfacePair p = campedelli();
  p.K2_S = 1;
  p.g_C_hat = 5;
  return p;
}
}  // namespace

TEST_CASE("genus-2 pencil check") {
  auto c = check_genus_two_pencil(campedelli());
  CHECK(c.h0_K_plus_H == 2);
  CHECK(c.d == 2);
  CHECK(c.g_C_hat_at_least_3);
  auto g = check_genus_two_pencil(godeaux());
  CHECK(g.h0_K_plus_H == 2);
  CHECK(!g.g_C_hat_at_least_3);
  SurfacePair bad = campedelli();
  bad.H_self = 2;  // g(H) = 3
  bad.g_H = 3;
  CHECK_THROWS_WITH_AS(check_genus_two_pencil(bad), doctest::Contains("NotGenusTwoFiber"),
                       Error);
}

TEST_CASE("standard construction values") {
  // oracle (hand expansion): K3 = 12 (K+H)^2 = 12(2+4+0) = 72;
  // chi(O_X) = chi(O_Y) + chi(O_S(-H)) chi(O_C0(-theta)) = -1 + 2(-1) = -3
  auto r = standard_construction(campedelli());
  CHECK(r.pg_F == 19);
  CHECK(r.pg_X == 2);
  CHECK(r.K3_X == 72);
  CHECK(r.chi_omega_X == 3);
  CHECK(bounds::miyaoka_yau_check(Rat(r.K3_X), Rat(r.chi_omega_X)));  // 72 <= 216

  SurfacePair g5 = godeaux();
  CHECK(standard_construction(g5).pg_F == 16);
  SurfacePair g4 = godeaux();
  g4.g_C_hat = 4;
  CHECK(standard_construction(g4).pg_F == 13);
  // d = 0 branch (no shipped example): pg_F = 3 g
  SurfacePair d0 = campedelli();
  d0.d = 0;
  CHECK(standard_construction(d0).pg_F == 18);
  // guard: pg(S) must vanish
  SurfacePair bad = campedelli();
  bad.pg_S = 1;
  CHECK_THROWS_AS(standard_construction(bad), Error);
}

TEST_CASE("variant construction values") {
  auto r = variant_construction(campedelli(), 3);
  CHECK(r.g_F == 13);
  CHECK(r.pg_X == 4);
  CHECK(variant_construction(godeaux(), 5).g_F == 11);
  SurfacePair g4 = godeaux();
  g4.g_C_hat = 4;
  CHECK(variant_construction(g4, 3).g_F == 9);
  CHECK_THROWS_WITH_AS(variant_construction(campedelli(), 2), doctest::Contains("NuTooSmall"),
                       Error);
  // pg_X strictly increasing in nu: an unbounded family
  long prev = 0;
  for (long nu = 3; nu <= 12; ++nu) {
    long cur = variant_construction(campedelli(), nu).pg_X;
    CHECK(cur == 2 * (nu - 1));
    CHECK(cur > prev);
    prev = cur;
  }
  // brute-force ledger oracle for h0(K_C + theta), theta a nontrivial
  // 2-torsion class: deg(K+theta) = 2nu-2, h1 = h0(-theta) = 0,
  // so h0 = deg + 1 - g = nu - 1; pg_X doubles it.
  for (long nu = 3; nu <= 8; ++nu) {
    long deg = 2 * nu - 2;
    long h0_twist = deg + 1 - nu;  // Riemann-Roch with vanishing h1
    CHECK(variant_construction(campedelli(), nu).pg_X == 2 * h0_twist);
  }
}

TEST_CASE("standard vs variant difference is the pencil genus") {
  for (long g : {4L, 5L, 6L}) {
    SurfacePair p = campedelli();
    p.g_C_hat = g;
    long pgF = standard_construction(p).pg_F;
    long gF = variant_construction(p, 3).g_F;
    CHECK(pgF - gF == g);
  }
}
