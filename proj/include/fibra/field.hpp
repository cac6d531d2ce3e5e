#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fibra/errors.hpp"

namespace fibra {

using Rat = mpq_class;

std::string rat_str(const Rat& r);
bool rat_is_square(const Rat& r, Rat* root = nullptr);
Rat rat_floor(const Rat& r);
Rat rat_ceil(const Rat& r);

// Dense univariate polynomial over Q, ascending coefficients, no trailing zeros.
struct RatPoly {
  std::vector<Rat> c;

  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }
  static RatPoly constant(const Rat& r) { return RatPoly({r}); }
  static RatPoly monomial(int deg, const Rat& r);

  void trim();
  bool is_zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }  // deg(0) == -1
  const Rat& lead() const { return c.back(); }
  Rat at(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : Rat(0); }

  bool operator==(const RatPoly& o) const { return c == o.c; }
  std::string str(const std::string& var = "t") const;
};

RatPoly rp_add(const RatPoly& a, const RatPoly& b);
RatPoly rp_sub(const RatPoly& a, const RatPoly& b);
RatPoly rp_mul(const RatPoly& a, const RatPoly& b);
RatPoly rp_scale(const RatPoly& a, const Rat& s);
// Euclidean division over Q; b must be nonzero.
void rp_divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r);
RatPoly rp_gcd(const RatPoly& a, const RatPoly& b);  // monic
RatPoly rp_derivative(const RatPoly& a);
Rat rp_eval(const RatPoly& a, const Rat& x);

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// A fixed number field Q[t]/(m(t)), m monic irreducible of degree 1..4.
// Degree 1 is Q itself. Irreducibility is certified on construction by the
// rational-root test (deg <= 3) plus quadratic-factor elimination (deg 4).
class NumberField {
 public:
  static FieldPtr rationals();
  static FieldPtr make(const RatPoly& min_poly);

  const RatPoly& min_poly() const { return min_poly_; }
  int degree() const { return degree_; }
  bool is_rational_field() const { return degree_ == 1; }

  // Generators g of quadratic subfields with g^2 = rational; used by the
  // square-root decision procedure. Pairs (g as coeff vector, g^2).
  const std::vector<std::pair<std::vector<Rat>, Rat>>& quad_subfield_gens() const {
    return quad_gens_;
  }
  bool operator==(const NumberField& o) const { return min_poly_ == o.min_poly_; }

 private:
  explicit NumberField(RatPoly mp);
  RatPoly min_poly_;
  int degree_ = 1;
  std::vector<std::pair<std::vector<Rat>, Rat>> quad_gens_;
};

// Certified irreducibility test for monic rational polynomials of degree <= 4.
bool ratpoly_irreducible(const RatPoly& p);
// All rational roots (with multiplicity stripped; distinct roots).
std::vector<Rat> rational_roots(const RatPoly& p);

// An element of a NumberField in canonical form (representative degree < field degree).
class FE {
 public:
  FE() = default;
  FE(FieldPtr f, std::vector<Rat> coeffs);
  static FE zero(const FieldPtr& f);
  static FE one(const FieldPtr& f);
  static FE of(const FieldPtr& f, const Rat& r);
  static FE gen(const FieldPtr& f);  // the class of t

  const FieldPtr& field() const { return field_; }
  const std::vector<Rat>& coeffs() const { return a_; }
  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // requires is_rational

  FE operator+(const FE& o) const;
  FE operator-(const FE& o) const;
  FE operator-() const;
  FE operator*(const FE& o) const;
  FE operator/(const FE& o) const;  // DivisionByZero
  FE inv() const;
  FE pow(unsigned n) const;
  bool operator==(const FE& o) const;
  bool operator!=(const FE& o) const { return !(*this == o); }
  // Deterministic total order (lexicographic on coefficients); used for
  // canonical point ordering, not mathematically meaningful.
  bool operator<(const FE& o) const;

  std::string str() const;

 private:
  void reduce_();
  FieldPtr field_;
  std::vector<Rat> a_;
};

FE fe_scale(const FE& x, const Rat& r);

// Exact square root in the field. Returns the root if d is a square in K,
// std::nullopt if certified not a square. Throws Error(Undecidable) for
// shapes outside the supported decision procedure (deg-4 fields that are not
// of the form t^4+p t^2+q, or mixed-parity targets there).
std::optional<FE> sqrt_in_field(const FE& d);

}  // namespace fibra
