#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fibra/field.hpp"

namespace fibra {

// Dense univariate polynomial over a number field, ascending coefficients.
struct UPoly {
  FieldPtr K;
  std::vector<FE> c;

  UPoly() = default;
  explicit UPoly(FieldPtr k) : K(std::move(k)) {}
  UPoly(FieldPtr k, std::vector<FE> coeffs) : K(std::move(k)), c(std::move(coeffs)) { trim(); }
  static UPoly constant(const FE& v);

  void trim();
  bool is_zero() const { return c.empty(); }
  int deg() const { return (int)c.size() - 1; }
  const FE& lead() const { return c.back(); }
  FE at(int i) const;

  bool operator==(const UPoly& o) const;
  std::string str(const std::string& var = "x") const;
};

UPoly up_add(const UPoly& a, const UPoly& b);
UPoly up_sub(const UPoly& a, const UPoly& b);
UPoly up_mul(const UPoly& a, const UPoly& b);
UPoly up_scale(const UPoly& a, const FE& s);
UPoly up_shift(const UPoly& a, int k);  // multiply by x^k
void up_divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly up_divexact(const UPoly& a, const UPoly& b);  // asserts zero remainder
UPoly up_gcd(const UPoly& a, const UPoly& b);       // monic (or zero)
UPoly up_derivative(const UPoly& a);
FE up_eval(const UPoly& a, const FE& x);
UPoly up_monic(const UPoly& a);
// Order of vanishing at x = x0 (0 if nonzero there); ZeroInput on zero poly.
int up_order_at(const UPoly& a, const FE& x0);
// p(x) -> p(x + a)
UPoly up_translate(const UPoly& a, const FE& sh);
// Squarefree part (char 0): p / gcd(p, p').
UPoly up_squarefree_part(const UPoly& a);
// Yun squarefree decomposition: returns list of (factor, multiplicity),
// factors squarefree and pairwise coprime, product^mult = monic(p).
std::vector<std::pair<UPoly, int>> up_squarefree_decomposition(const UPoly& a);

// Sparse bivariate polynomial over a number field. Keys are (deg_x, deg_y).
class BiPoly {
 public:
  using Key = std::pair<int, int>;

  BiPoly() = default;
  explicit BiPoly(FieldPtr k) : K_(std::move(k)) {}
  static BiPoly constant(const FE& v);
  static BiPoly var_x(const FieldPtr& K);
  static BiPoly var_y(const FieldPtr& K);
  static BiPoly monomial(const FE& v, int i, int j);

  const FieldPtr& field() const { return K_; }
  const std::map<Key, FE>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  int deg_x() const;
  int deg_y() const;
  int total_deg() const;
  int min_total_deg() const;  // multiplicity at origin (ZeroCurve on zero)
  FE coeff(int i, int j) const;
  void set_coeff(int i, int j, const FE& v);

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator-() const;
  BiPoly operator*(const BiPoly& o) const;
  bool operator==(const BiPoly& o) const { return t_ == o.t_; }

  BiPoly derivative_x() const;
  BiPoly derivative_y() const;
  FE eval(const FE& x, const FE& y) const;
  // Substitute polynomials for x and y.
  BiPoly subst(const BiPoly& px, const BiPoly& py) const;
  BiPoly translate(const FE& a, const FE& b) const;  // f(x+a, y+b)
  BiPoly divexact_xpow(int k) const;                 // divide by x^k
  BiPoly swap_vars() const;
  // Lowest homogeneous part (the tangent cone at the origin).
  BiPoly lowest_form() const;
  // Homogeneous part of given total degree.
  BiPoly homogeneous_part(int d) const;

  // View as polynomial in y with UPoly(x) coefficients (index = y degree).
  std::vector<UPoly> y_coeffs() const;
  static BiPoly from_y_coeffs(const FieldPtr& K, const std::vector<UPoly>& v);
  UPoly eval_x(const FE& x0) const;  // univariate in y
  UPoly eval_y(const FE& y0) const;  // univariate in x

  std::string str() const;

 private:
  FieldPtr K_;
  std::map<Key, FE> t_;
  void add_term(int i, int j, const FE& v);
  friend BiPoly bp_normalized(const BiPoly&);
};

// Resultant eliminating y: Sylvester determinant over K[x] (Bareiss).
// ZeroInput if either argument is zero.
UPoly resultant_y(const BiPoly& p, const BiPoly& q);
// gcd in K[x,y] up to a scalar (primitive-part Euclid in y, content in x).
BiPoly bp_gcd(const BiPoly& p, const BiPoly& q);
// gcd(p, p_x, p_y) constant?
bool bp_squarefree(const BiPoly& p);
// Normalize so the lexicographically-first nonzero coefficient is 1.
BiPoly bp_normalized(const BiPoly& p);

}  // namespace fibra
