#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fibra/piclattice.hpp"

using namespace fibra;

namespace {
FieldPtr Qi() {
  static FieldPtr k = NumberField::make(RatPoly({Rat(1), Rat(0), Rat(1)}));
  return k;
}
FE fe(const FieldPtr& K, long n) { return FE::of(K, Rat(n)); }
}  // namespace

TEST_CASE("blow-up bookkeeping") {
  auto K = NumberField::rationals();
  auto P2 = Lattice::make(BaseSurface::P2, K);
  CHECK(P2->canonical().self() == 9);
  auto L = P2->blow_up(SurfPoint::p2_affine(K, fe(K, 0), fe(K, 0)), "p");
  CHECK(L->canonical().self() == 8);  // K = -3H + e
  // duplicate slot
  CHECK_THROWS_WITH_AS(L->blow_up(SurfPoint::p2_affine(K, fe(K, 0), fe(K, 0)), "q"),
                       doctest::Contains("DuplicatePoint"), Error);

  auto P = Lattice::make(BaseSurface::P1xP1, K);
  LatPtr cur = P;
  for (int i = 0; i < 12; ++i)
    cur = cur->blow_up(SurfPoint::p1xp1_xy(K, fe(K, i), fe(K, 2 * i + 1)),
                       "J" + std::to_string(i + 1));
  CHECK(cur->rank() == 14);
  CHECK(cur->canonical().self() == -4);  // 8 - 12
}

TEST_CASE("intersection numbers") {
  auto K = NumberField::rationals();
  auto P = Lattice::make(BaseSurface::P1xP1, K);
  CHECK(P->base_class(7, 3).dot(P->base_class(-2, -2)) == -20);
  CHECK(P->base_class(5, 1).self() == 10);
  auto L = P->blow_up(SurfPoint::p1xp1_xy(K, fe(K, 0), fe(K, 0)), "e1")
               ->blow_up(SurfPoint::p1xp1_xy(K, fe(K, 1), fe(K, 1)), "e2");
  CHECK(L->exc(0).dot(L->exc(1)) == 0);
  CHECK(L->exc(0).self() == -1);
  // pullback is an isometry onto its image
  DivClass a = P->base_class(3, 4), b = P->base_class(1, 2);
  CHECK(L->embed(a).dot(L->embed(b)) == a.dot(b));
  CHECK_THROWS_WITH_AS((void)P->base_class(1, 0).dot(L->exc(0)),
                       doctest::Contains("LatticeMismatch"), Error);
}

TEST_CASE("adjunction and Riemann-Roch") {
  auto K = NumberField::rationals();
  auto P = Lattice::make(BaseSurface::P1xP1, K);
  CHECK(P->adjunction_genus(P->base_class(1, 1)) == 0);
  for (long a = 0; a <= 5; ++a)
    for (long b = 0; b <= 3; ++b)
      CHECK(P->adjunction_genus(P->base_class(a, b)) == (a - 1) * (b - 1));
  // abstract class with D^2 = 0, D.K = 2: genus 2 (the genus-2 fiber datum)
  CHECK(P->adjunction_genus(P->base_class(0, -1)) == 2);
  // chi: D = 0 and D = K
  CHECK(P->riemann_roch_chi(P->zero()) == 1);
  CHECK(P->riemann_roch_chi(P->canonical()) == 1);
  CHECK(P->riemann_roch_chi(P->base_class(5, 1)) == 12);
}

TEST_CASE("bilinearity, symmetry and signature") {
  auto K = NumberField::rationals();
  auto P = Lattice::make(BaseSurface::P1xP1, K);
  LatPtr L = P->blow_up(SurfPoint::p1xp1_xy(K, fe(K, 0), fe(K, 0)), "a")
                 ->blow_up(SurfPoint::p1xp1_xy(K, fe(K, 1), fe(K, 0)), "b")
                 ->blow_up(SurfPoint::p1xp1_xy(K, fe(K, 2), fe(K, 0)), "c");
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int it = 0; it < 25; ++it) {
    DivClass x = L->zero(), y = L->zero(), z = L->zero();
    for (auto* v : {&x, &y, &z})
      for (auto& c : v->v) c = d(rng);
    CHECK(x.dot(y) == y.dot(x));
    CHECK((x + y).dot(z) == x.dot(z) + y.dot(z));
  }
  auto [pos, neg] = L->signature();
  CHECK(pos == 1);
  CHECK(neg == L->rank() - 1);
  auto [p2pos, p2neg] = Lattice::make(BaseSurface::P2, K)->signature();
  CHECK(p2pos == 1);
  CHECK(p2neg == 0);
}

TEST_CASE("interpolation h0: the (5,1) system at the twelve points") {
  auto K = Qi();
  FE i = FE::gen(K), one = FE::one(K), zero = FE::zero(K);
  std::vector<SurfPoint> pts;
  pts.push_back(SurfPoint::p1xp1_xy(K, zero, zero));
  pts.push_back(SurfPoint::p1xp1_xy(K, std::nullopt, std::nullopt));
  pts.push_back(SurfPoint::p1xp1_xy(K, zero, std::nullopt));
  pts.push_back(SurfPoint::p1xp1_xy(K, std::nullopt, zero));
  for (FE a : {one, -one})
    for (FE b : {one, -one}) pts.push_back(SurfPoint::p1xp1_xy(K, a, b));
  for (FE a : {i, -i})
    for (FE b : {i, -i}) pts.push_back(SurfPoint::p1xp1_xy(K, a, b));
  std::vector<PointCondition> conds;
  for (auto& p : pts) conds.push_back({p, 1});
  // 12 monomials, rank-12 condition matrix: h0 = 0 (drives pg(S) = 0)
  CHECK(h0_interpolation(BaseSurface::P1xP1, K, 5, 1, conds) == 0);
  // no conditions: the full monomial count; the (0,1) pencil
  CHECK(h0_interpolation(BaseSurface::P1xP1, K, 0, 1, {}) == 2);
  // monotonicity: adding a condition never increases the dimension
  long prev = h0_interpolation(BaseSurface::P1xP1, K, 5, 1, {});
  std::vector<PointCondition> acc;
  for (auto& p : pts) {
    acc.push_back({p, 1});
    long cur = h0_interpolation(BaseSurface::P1xP1, K, 5, 1, acc);
    CHECK(cur <= prev);
    prev = cur;
  }
}

TEST_CASE("interpolation h0: cubics with assigned multiplicities") {
  // m=2 at P4 = (3/2, 0) and m=1 at the five points Q1..Q5 over Q(sqrt(-3)):
  // 10 monomials - rank 8 = 2 (the two-parameter cubic family)
  auto K = NumberField::make(RatPoly({Rat(3), Rat(0), Rat(1)}));
  FE xp = FE(K, {Rat(3, 2), Rat(1, 2)});   // (3 + sqrt(-3))/2
  FE xm = FE(K, {Rat(3, 2), Rat(-1, 2)});
  std::vector<PointCondition> conds;
  conds.push_back({SurfPoint::p2_affine(K, FE::of(K, Rat(3, 2)), FE::zero(K)), 2});
  conds.push_back({SurfPoint::p2_affine(K, FE::one(K), FE::zero(K)), 1});
  conds.push_back({SurfPoint::p2_affine(K, xp, xp), 1});
  conds.push_back({SurfPoint::p2_affine(K, xm, xm), 1});
  conds.push_back({SurfPoint::p2_affine(K, xp, -xp), 1});
  conds.push_back({SurfPoint::p2_affine(K, xm, -xm), 1});
  CHECK(h0_interpolation(BaseSurface::P2, K, 3, 0, conds) == 2);
}

TEST_CASE("interpolation h0 with an infinitely-near child condition") {
  // conics through 5 general points: h0 = 1; replace one simple point by a
  // (point + direction) chain (0,1)-style child: the condition "pass through
  // the infinitely near point" is passing through the root
  auto K = NumberField::rationals();
  std::vector<PointCondition> conds;
  conds.push_back({SurfPoint::p2_affine(K, fe(K, 0), fe(K, 0)), 1});
  conds.push_back({SurfPoint::p2_affine(K, fe(K, 1), fe(K, 0)), 1});
  conds.push_back({SurfPoint::p2_affine(K, fe(K, 0), fe(K, 1)), 1});
  conds.push_back({SurfPoint::p2_affine(K, fe(K, 1), fe(K, 1)), 1});
  CHECK(h0_interpolation(BaseSurface::P2, K, 2, 0, conds) == 2);
  // tangent-direction condition at (0,0) along x = y: one more condition
  PointCondition tang{SurfPoint::p2_affine(K, fe(K, 0), fe(K, 0)), 1};
  tang.has_child = true;
  tang.d0 = FE::one(K);
  tang.d1 = FE::one(K);
  tang.child_mult = 1;
  std::vector<PointCondition> conds2 = {tang, conds[1], conds[2], conds[3]};
  CHECK(h0_interpolation(BaseSurface::P2, K, 2, 0, conds2) == 1);
}
