#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fibra/expr.hpp"
#include "fibra/poly.hpp"

namespace fibra {

enum class BaseSurface { P2, P1xP1 };

std::string base_name(BaseSurface b);

// A point of P^2 or P^1 x P^1 over a number field, canonicalized by scaling
// the first nonzero coordinate (per factor) to 1. Infinity convention on
// P^1 x P^1: x = u1/u0 with infinity = (0:1); likewise for y.
class SurfPoint {
 public:
  struct InfNear {
    std::shared_ptr<const SurfPoint> parent;
    FE d0, d1;  // tangent direction in the parent's chart, projective (d0:d1)
    int level = 1;
  };

  static SurfPoint p2(const FieldPtr& K, FE X, FE Y, FE Z);
  static SurfPoint p2_affine(const FieldPtr& K, const FE& x, const FE& y);
  static SurfPoint p1xp1(const FieldPtr& K, FE u0, FE u1, FE v0, FE v1);
  // x/y given as field values or infinity.
  static SurfPoint p1xp1_xy(const FieldPtr& K, const std::optional<FE>& x,
                            const std::optional<FE>& y);
  static SurfPoint infinitely_near(const SurfPoint& parent, FE d0, FE d1);

  BaseSurface base() const { return base_; }
  const FieldPtr& field() const { return K_; }
  const std::vector<FE>& coords() const { return c_; }
  bool is_infinitely_near() const { return inf_.has_value(); }
  const InfNear& inf_data() const { return *inf_; }
  int level() const { return inf_ ? inf_->level : 0; }

  bool operator==(const SurfPoint& o) const;
  bool operator<(const SurfPoint& o) const;  // canonical deterministic order
  std::string str() const;

 private:
  BaseSurface base_;
  FieldPtr K_;
  std::vector<FE> c_;  // P2: (X,Y,Z); P1xP1: (u0,u1,v0,v1)
  std::optional<InfNear> inf_;
  void canonicalize_();
};

// Chart codes. P1xP1: 0 = (x fin, y fin), 1 = (x inf, y fin), 2 = (x fin,
// y inf), 3 = (x inf, y inf). P2: 0 = {Z=1} coords (x,y), 1 = {X=1} coords
// (y,z), 2 = {Y=1} coords (x,z).
struct Chart {
  BaseSurface base;
  int code;
};

// A curve on the base surface: declared (bi)degree plus sparse affine terms.
// The bihomogenization/homogenization is determined by the declared degree;
// missing degree is carried by lines at infinity (u0 / v0 / Z factors).
class Form {
 public:
  Form() = default;
  // daf: (a,b) for P1xP1; (d, 0) for P2.
  static Form from_affine(BaseSurface base, const BiPoly& affine, int da, int db);
  static Form parse(const std::string& expr, BaseSurface base, const FieldPtr& K, int da,
                    int db);
  // Fiber of the first/second projection on P1xP1 (axis 0: x = at, axis 1: y = at).
  static Form fiber(const FieldPtr& K, int axis, const std::optional<FE>& at);

  BaseSurface base() const { return base_; }
  const FieldPtr& field() const { return K_; }
  const BiPoly& affine() const { return f_; }
  int deg_a() const { return da_; }
  int deg_b() const { return db_; }

  // Dehomogenized polynomial in the given chart's local coordinates,
  // including the infinity-line factors visible there.
  BiPoly chart_poly(int chart) const;
  // Chart containing the point plus the point's local coordinates there.
  static std::pair<int, std::pair<FE, FE>> chart_of(const SurfPoint& p);
  // Local coordinates of p in the given chart, if p is visible there.
  static std::optional<std::pair<FE, FE>> coords_in_chart(const SurfPoint& p, int chart);
  // Localized polynomial with the (level-0) point moved to the origin.
  BiPoly local_at(const SurfPoint& p) const;
  FE value_at(const SurfPoint& p) const;  // chart-local value (0 iff on curve)

  bool same_space(const Form& o) const;
  long bezout_with(const Form& o) const;
  bool has_common_component(const Form& o) const;
  bool is_squarefree() const;  // in every affine chart
  Form multiply(const Form& o) const;
  Form add(const Form& o) const;  // same declared degree (pencil combinations)
  Form scale(const FE& s) const;

  std::string str() const;

 private:
  BaseSurface base_ = BaseSurface::P1xP1;
  FieldPtr K_;
  BiPoly f_;  // exponents of (u1, v1) resp. (X, Y)
  int da_ = 0, db_ = 0;
};

// parse_and_homogenize with the spec's error contract (ParseError, DegreeOverflow).
Form parse_and_homogenize(const std::string& expr, BaseSurface base, const FieldPtr& K,
                          int da, int db);

// gcd up to scalar + squarefree flag for (pairs of) forms.
struct GcdResult {
  BiPoly gcd_affine;  // normalized; constant 1 if coprime (affine parts)
  int shared_x_inf = 0, shared_y_inf = 0;  // shared infinity-line multiplicities
  bool is_squarefree_p = false;            // whether the first argument is squarefree
};
GcdResult squarefree_and_gcd(const Form& p, const Form* q = nullptr);

// Multiplicity of the localized curve at the point (strict transform taken
// for infinitely near points). 0 if the curve misses the point.
int mult_at(const Form& curve, const SurfPoint& p);

// Local polynomial of `curve` strict-transformed to the level of `p`,
// with p at the origin of the returned coordinates.
BiPoly strict_local_at(const Form& curve, const SurfPoint& p);

// Tangent-cone factor over the working field.
struct ConeFactor {
  enum class Kind { Line, IrreducibleQuadratic };
  Kind kind;
  FE la, lb;          // line: la*x + lb*y (normalized, first nonzero = 1)
  FE qa, qb, qc;      // quadratic: qa x^2 + qb xy + qc y^2 (monic in x^2 or normalized)
  int mult = 1;
  int directions() const { return kind == Kind::Line ? 1 : 2; }
  bool same_factor(const ConeFactor& o) const;
  std::string str() const;
};

// Factor a nonzero binary form into lines over K and irreducible quadratics
// (certified by the square-root decision procedure). Throws
// Error(UnsplitTangentCone) if a factor of degree >= 3 stays irreducible over
// K or a quadratic's splitting cannot be decided.
std::vector<ConeFactor> factor_binary_form(const BiPoly& cone);

// Distinct-direction count of a binary form over the algebraic closure,
// certified by a gcd computation over K (no factorization needed).
struct ConeSummary {
  int degree = 0;
  int distinct = 0;
  bool squarefree = false;
};
ConeSummary cone_summary(const BiPoly& cone);

}  // namespace fibra
