#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibra/arrangement.hpp"

using namespace fibra;

namespace {

FieldPtr Qi() {
  static FieldPtr k = NumberField::make(RatPoly({Rat(1), Rat(0), Rat(1)}));
  return k;
}

FE fe(const FieldPtr& K, long n, long d = 1) { return FE::of(K, Rat(n, d)); }

SurfPoint pt(const FieldPtr& K, const std::optional<FE>& x, const std::optional<FE>& y) {
  return SurfPoint::p1xp1_xy(K, x, y);
}

// The curve family C1..C4, fibers F1..F6 and pencil member D = D1 + 2 D2 + 3 D3
// on P1xP1 over Q(i) (intersecting in 12 ordinary quadruple points).
struct Family54 {
  FieldPtr K = Qi();
  Form C1 = Form::parse("x=y", BaseSurface::P1xP1, K, 1, 1);
  Form C2 = Form::parse("x=-y", BaseSurface::P1xP1, K, 1, 1);
  Form C3 = Form::parse("xy=1", BaseSurface::P1xP1, K, 1, 1);
  Form C4 = Form::parse("xy=-1", BaseSurface::P1xP1, K, 1, 1);
  Form F1 = Form::fiber(K, 0, fe(K, 0));
  Form F2 = Form::fiber(K, 0, std::nullopt);
  Form F3 = Form::fiber(K, 0, fe(K, 1));
  Form F4 = Form::fiber(K, 0, fe(K, -1));
  Form F5 = Form::fiber(K, 0, FE::gen(K));
  Form F6 = Form::fiber(K, 0, -FE::gen(K));
  Form D = make_D();
  Form make_D() {
    Form D1 = C1.multiply(C2).multiply(F1).multiply(F2);
    Form D2 = C1.multiply(C3).multiply(F3).multiply(F4);
    Form D3 = C2.multiply(C3).multiply(F5).multiply(F6);
    return D1.add(D2.scale(fe(K, 2))).add(D3.scale(fe(K, 3)));
  }
  Arrangement R1() const {
    Arrangement a;
    a.base = BaseSurface::P1xP1;
    a.K = K;
    a.components = {{"C1", C1, 1}, {"C2", C2, 1}, {"C3", C3, 1}, {"C4", C4, 1},
                    {"F1", F1, 1}, {"F2", F2, 1}, {"F3", F3, 1}, {"F4", F4, 1},
                    {"F5", F5, 1}, {"F6", F6, 1}, {"D", D, 1}};
    return a;
  }
  std::vector<SurfPoint> twelve() const {
    FE i = FE::gen(K), one = FE::one(K), zero = FE::zero(K);
    std::vector<SurfPoint> v;
    v.push_back(pt(K, zero, zero));
    v.push_back(pt(K, std::nullopt, std::nullopt));
    v.push_back(pt(K, zero, std::nullopt));
    v.push_back(pt(K, std::nullopt, zero));
    for (FE a : {one, -one})
      for (FE b : {one, -one}) v.push_back(pt(K, a, b));
    for (FE a : {i, -i})
      for (FE b : {i, -i}) v.push_back(pt(K, a, b));
    return v;
  }
};

}  // namespace

TEST_CASE("local intersection multiplicities") {
  auto K = NumberField::rationals();
  SurfPoint origin = SurfPoint::p2_affine(K, FE::zero(K), FE::zero(K));
  Form l1 = Form::parse("x-y", BaseSurface::P2, K, 1, 0);
  Form l2 = Form::parse("x+y", BaseSurface::P2, K, 1, 0);
  CHECK(intersection_mult(l1, l2, origin) == 1);
  // (x - y) and (xy - 1) meet transversally at (1,1)
  Form h = Form::parse("xy=1", BaseSurface::P2, K, 2, 0);
  CHECK(intersection_mult(l1, h, SurfPoint::p2_affine(K, FE::one(K), FE::one(K))) == 1);
  // tangency fixture: (y^2, y - x^2) at the origin has multiplicity 4
  Form f1 = Form::parse("y^2", BaseSurface::P2, K, 2, 0);
  Form f2 = Form::parse("y - x^2", BaseSurface::P2, K, 2, 0);
  CHECK(intersection_mult(f1, f2, origin) == 4);
  CHECK_THROWS_WITH_AS(intersection_mult(f1, f1, origin),
                       doctest::Contains("CommonComponent"), Error);
}

TEST_CASE("Bezout completeness certificates") {
  Family54 fam;
  auto K = fam.K;
  FE one = FE::one(K), zero = FE::zero(K);
  // C1 (x=y), C3 (xy=1): {(1,1), (-1,-1)} is complete with total 2
  auto cert = certify_complete(fam.C1, fam.C3, {pt(K, one, one), pt(K, -one, -one)});
  CHECK(cert.complete);
  CHECK(cert.bezout_total == 2);
  // C1, C2 meet at (0,0) and (inf,inf): dropping one point is incomplete
  CHECK_THROWS_WITH_AS(certify_complete(fam.C1, fam.C2, {pt(K, zero, zero)}),
                       doctest::Contains("IncompleteList"), Error);
  auto cert2 = certify_complete(fam.C1, fam.C2,
                                {pt(K, zero, zero), pt(K, std::nullopt, std::nullopt)});
  CHECK(cert2.complete);
  CHECK_THROWS_WITH_AS(certify_complete(fam.C1, fam.C1, {pt(K, zero, zero)}),
                       doctest::Contains("CommonComponent"), Error);
}

TEST_CASE("the twelve-point arrangement") {
  Family54 fam;
  auto K = fam.K;
  Arrangement R1 = fam.R1();
  CHECK(R1.class_a() == 14);
  CHECK(R1.class_b() == 6);
  // multiplicity 4 at every one of the twelve points
  for (auto& p : fam.twelve()) CHECK(arrangement_mult_at(R1, p) == 4);
  // generic points are off the divisor or smooth
  CHECK(arrangement_mult_at(R1, pt(K, fe(K, 2), fe(K, 3))) == 0);
  // the pencil member D passes through all 12 points with multiplicity 1
  for (auto& p : fam.twelve()) CHECK(mult_at(fam.D, p) == 1);
  // D is squarefree and coprime to every named component
  CHECK(fam.D.is_squarefree());
  for (auto* f : {&fam.C1, &fam.C2, &fam.C3, &fam.C4, &fam.F1, &fam.F2})
    CHECK(!fam.D.has_common_component(*f));
}

TEST_CASE("classification of the twelve points") {
  Family54 fam;
  Arrangement R1 = fam.R1();
  for (auto& p : fam.twelve()) {
    SingularPointRecord rec = classify_singularity(R1, p);
    CHECK(rec.type == SingType::OrdinaryQuadruple);
    CHECK(rec.total_mult == 4);
    CHECK(rec.tangent_directions == 4);
    // consistency: classify total = arrangement multiplicity
    CHECK(rec.total_mult == arrangement_mult_at(R1, p));
  }
}

TEST_CASE("strict transform smoothness and locus certification") {
  Family54 fam;
  Arrangement R1 = fam.R1();
  std::string diag;
  CHECK(strict_transform_smooth_after_blowup(R1, fam.twelve(), &diag));
  // cusp: one blow-up is not enough
  auto K = NumberField::rationals();
  Arrangement cusp;
  cusp.base = BaseSurface::P2;
  cusp.K = K;
  cusp.components = {{"C", Form::parse("y^2-x^3", BaseSurface::P2, K, 3, 0), 1}};
  SurfPoint o = SurfPoint::p2_affine(K, FE::zero(K), FE::zero(K));
  CHECK(!strict_transform_smooth_after_blowup(cusp, {o}, &diag));
  // two transverse lines: fine
  Arrangement lines;
  lines.base = BaseSurface::P2;
  lines.K = K;
  lines.components = {{"L1", Form::parse("x", BaseSurface::P2, K, 1, 0), 1},
                      {"L2", Form::parse("y", BaseSurface::P2, K, 1, 0), 1}};
  CHECK(strict_transform_smooth_after_blowup(lines, {o}, &diag));
  // full locus certification of R1 at the twelve points
  LocusCert cert = singular_locus_certify(R1, fam.twelve());
  CHECK(cert.ok);
  // omitting (inf, inf) breaks the C1*C2 completeness
  auto pts = fam.twelve();
  pts.erase(pts.begin() + 1);
  CHECK_THROWS_WITH_AS(singular_locus_certify(R1, pts),
                       doctest::Contains("IncompleteList"), Error);
}

TEST_CASE("classification record determinism") {
  Family54 fam;
  Arrangement R1 = fam.R1();
  auto p = fam.twelve()[4];
  auto a = classify_singularity(R1, p);
  auto b = classify_singularity(R1, p);
  CHECK(a.type == b.type);
  CHECK(a.tangent_directions == b.tangent_directions);
  CHECK(a.component_mults == b.component_mults);
}
