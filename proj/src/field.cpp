#include "fibra/field.hpp"

#include <algorithm>
#include <sstream>

namespace fibra {

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

bool rat_is_square(const Rat& r, Rat* root) {
  if (r < 0) return false;
  if (r == 0) {
    if (root) *root = 0;
    return true;
  }
  mpz_class num = r.get_num(), den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  if (root) {
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    *root = Rat(rn, rd);
  }
  return true;
}

Rat rat_floor(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return Rat(q);
}

Rat rat_ceil(const Rat& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return Rat(q);
}

void RatPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

RatPoly RatPoly::monomial(int deg, const Rat& r) {
  std::vector<Rat> v(deg + 1, Rat(0));
  v[deg] = r;
  return RatPoly(std::move(v));
}

std::string RatPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg(); i >= 0; --i) {
    if (c[i] == 0) continue;
    Rat v = c[i];
    if (!first) os << (v > 0 ? "+" : "-");
    else if (v < 0) os << "-";
    first = false;
    Rat av = abs(v);
    if (i == 0 || av != 1) os << rat_str(av) << (i > 0 ? "*" : "");
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

RatPoly rp_add(const RatPoly& a, const RatPoly& b) {
  std::vector<Rat> v(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) v[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) v[i] += b.c[i];
  return RatPoly(std::move(v));
}

RatPoly rp_sub(const RatPoly& a, const RatPoly& b) {
  std::vector<Rat> v(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) v[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) v[i] -= b.c[i];
  return RatPoly(std::move(v));
}

RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> v(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) v[i + j] += a.c[i] * b.c[j];
  return RatPoly(std::move(v));
}

RatPoly rp_scale(const RatPoly& a, const Rat& s) {
  if (s == 0) return {};
  RatPoly r = a;
  for (auto& x : r.c) x *= s;
  return r;
}

void rp_divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  if (b.is_zero()) fail(ErrCode::DivisionByZero, "polynomial division by zero");
  r = a;
  q = RatPoly();
  q.c.assign(std::max<int>(a.deg() - b.deg() + 1, 0), Rat(0));
  while (!r.is_zero() && r.deg() >= b.deg()) {
    Rat f = r.lead() / b.lead();
    int d = r.deg() - b.deg();
    q.c[d] += f;
    for (int i = 0; i <= b.deg(); ++i) r.c[i + d] -= f * b.c[i];
    r.trim();
  }
  q.trim();
}

RatPoly rp_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly q, r;
    rp_divmod(x, y, q, r);
    x = y;
    y = r;
  }
  if (!x.is_zero()) x = rp_scale(x, Rat(1) / x.lead());
  return x;
}

RatPoly rp_derivative(const RatPoly& a) {
  if (a.deg() < 1) return {};
  std::vector<Rat> v(a.deg());
  for (int i = 1; i <= a.deg(); ++i) v[i - 1] = a.c[i] * i;
  return RatPoly(std::move(v));
}

Rat rp_eval(const RatPoly& a, const Rat& x) {
  Rat acc(0);
  for (int i = a.deg(); i >= 0; --i) acc = acc * x + a.c[i];
  return acc;
}

namespace {

std::vector<mpz_class> divisors(const mpz_class& n0) {
  mpz_class n = abs(n0);
  std::vector<mpz_class> ds;
  if (n == 0) return ds;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d * d != n) ds.push_back(n / d);
    }
  }
  return ds;
}

}  // namespace

std::vector<Rat> rational_roots(const RatPoly& p0) {
  std::vector<Rat> roots;
  if (p0.is_zero()) return roots;
  RatPoly p = p0;
  // strip x^k factor
  size_t shift = 0;
  while (shift < p.c.size() && p.c[shift] == 0) ++shift;
  if (shift > 0) {
    roots.push_back(Rat(0));
    p.c.erase(p.c.begin(), p.c.begin() + shift);
  }
  if (p.deg() < 1) return roots;
  // clear denominators
  mpz_class lcm = 1;
  for (auto& co : p.c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), co.get_den().get_mpz_t());
  std::vector<mpz_class> ic(p.c.size());
  for (size_t i = 0; i < p.c.size(); ++i) {
    Rat v = p.c[i] * Rat(lcm);
    ic[i] = v.get_num();
  }
  for (const auto& pn : divisors(ic.front()))
    for (const auto& qd : divisors(ic.back()))
      for (int sgn : {1, -1}) {
        Rat cand(sgn * pn, qd);
        cand.canonicalize();
        if (rp_eval(p, cand) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
  return roots;
}

bool ratpoly_irreducible(const RatPoly& p) {
  int d = p.deg();
  if (d < 1) return false;
  if (d == 1) return true;
  if (!rational_roots(p).empty()) return false;
  if (d <= 3) return true;
  // Degree 4, monic, no rational root: eliminate rational quadratic factors.
  // Depress x = y - a3/4, then y^4+py^2+qy+r splits into rational quadratics
  // iff the resolvent cubic U^3+2pU^2+(p^2-4r)U-q^2 has a rational root U
  // that is a square u^2 (u != 0), or q == 0 and p^2-4r is a rational square.
  Rat a3 = p.c[3], a2 = p.c[2], a1 = p.c[1], a0 = p.c[0];
  Rat s = a3 / 4;
  Rat pp = a2 - 6 * s * s;
  Rat qq = a1 - 2 * a2 * s + 8 * s * s * s;
  Rat rr = a0 - a1 * s + a2 * s * s - 3 * s * s * s * s;
  if (qq == 0 && rat_is_square(pp * pp - 4 * rr)) return false;
  RatPoly resolvent({-qq * qq, pp * pp - 4 * rr, 2 * pp, Rat(1)});
  for (const Rat& U : rational_roots(resolvent)) {
    if (U == 0) continue;  // covered by the q == 0 case
    Rat u;
    if (U > 0 && rat_is_square(U, &u)) return false;
  }
  return true;
}

NumberField::NumberField(RatPoly mp) : min_poly_(std::move(mp)) {
  degree_ = min_poly_.deg();
  // Quadratic subfield generators with rational squares.
  if (degree_ == 2) {
    // K = Q[t]/(t^2+bt+c): (2t+b)^2 = b^2-4c.
    Rat b = min_poly_.c[1], c = min_poly_.c[0];
    Rat D = b * b - 4 * c;
    if (D != 0 && !rat_is_square(D))
      quad_gens_.push_back({{b, Rat(2)}, D});
  } else if (degree_ == 4 && min_poly_.c[3] == 0 && min_poly_.c[1] == 0) {
    // K = Q[t]/(t^4+pt^2+q): (2t^2+p)^2 = p^2-4q.
    Rat p = min_poly_.c[2], q = min_poly_.c[0];
    Rat D = p * p - 4 * q;
    if (D != 0 && !rat_is_square(D))
      quad_gens_.push_back({{p, Rat(0), Rat(2), Rat(0)}, D});
    Rat s;
    if (rat_is_square(q, &s) && s != 0) {
      // V4 case: (t + s/t) and (t - s/t) generate the other two subfields.
      // s/t = -(t^3 + p t)/ (q/s) ... derive: t(t^3+pt) = t^4+pt^2 = -q, so
      // 1/t = -(t^3+pt)/q and s/t = -(s/q)(t^3+pt).
      Rat k = -s / q;
      // t + s/t -> coeffs [0, 1 + k*p, 0, k]
      Rat D2 = 2 * s - p;
      if (D2 != 0 && !rat_is_square(D2))
        quad_gens_.push_back({{Rat(0), 1 + k * p, Rat(0), k}, D2});
      Rat D3 = -2 * s - p;
      if (D3 != 0 && !rat_is_square(D3))
        quad_gens_.push_back({{Rat(0), 1 - k * p, Rat(0), -k}, D3});
    }
  }
}

FieldPtr NumberField::rationals() {
  static FieldPtr q = make(RatPoly({Rat(0), Rat(1)}));
  return q;
}

FieldPtr NumberField::make(const RatPoly& min_poly) {
  if (min_poly.deg() < 1) fail(ErrCode::InvalidInput, "minimal polynomial must have degree >= 1");
  if (min_poly.deg() > 4)
    fail(ErrCode::UnsupportedDegree, "number fields of degree > 4 are not supported");
  if (min_poly.lead() != 1) fail(ErrCode::InvalidInput, "minimal polynomial must be monic");
  if (!ratpoly_irreducible(min_poly))
    fail(ErrCode::ReduciblePolynomial,
         "minimal polynomial " + min_poly.str() + " is reducible over Q");
  return FieldPtr(new NumberField(min_poly));
}

FE::FE(FieldPtr f, std::vector<Rat> coeffs) : field_(std::move(f)), a_(std::move(coeffs)) {
  for (auto& x : a_) x.canonicalize();
  reduce_();
}

void FE::reduce_() {
  int n = field_->degree();
  if ((int)a_.size() > n) {
    // reduce modulo min_poly (monic)
    const RatPoly& m = field_->min_poly();
    for (int i = (int)a_.size() - 1; i >= n; --i) {
      Rat f = a_[i];
      if (f == 0) continue;
      a_[i] = 0;
      for (int j = 0; j < n; ++j) a_[i - n + j] -= f * m.c[j];
    }
  }
  a_.resize(n, Rat(0));
}

FE FE::zero(const FieldPtr& f) { return FE(f, {}); }
FE FE::one(const FieldPtr& f) { return FE(f, {Rat(1)}); }
FE FE::of(const FieldPtr& f, const Rat& r) { return FE(f, {r}); }
FE FE::gen(const FieldPtr& f) {
  if (f->degree() == 1) {
    // t is congruent to the root of the degree-1 modulus
    return FE(f, {-f->min_poly().c[0]});
  }
  return FE(f, {Rat(0), Rat(1)});
}

bool FE::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

bool FE::is_rational() const {
  for (size_t i = 1; i < a_.size(); ++i)
    if (a_[i] != 0) return false;
  return true;
}

Rat FE::rational_value() const {
  if (!is_rational()) fail(ErrCode::InvalidInput, "element is not rational: " + str());
  return a_.empty() ? Rat(0) : a_[0];
}

static void check_same_field(const FE& a, const FE& b) {
  if (!a.field() || !b.field() || !(*a.field() == *b.field()))
    fail(ErrCode::InvalidInput, "field elements from different fields");
}

FE FE::operator+(const FE& o) const {
  check_same_field(*this, o);
  std::vector<Rat> v = a_;
  for (size_t i = 0; i < o.a_.size(); ++i) v[i] += o.a_[i];
  return FE(field_, std::move(v));
}

FE FE::operator-(const FE& o) const {
  check_same_field(*this, o);
  std::vector<Rat> v = a_;
  for (size_t i = 0; i < o.a_.size(); ++i) v[i] -= o.a_[i];
  return FE(field_, std::move(v));
}

FE FE::operator-() const {
  std::vector<Rat> v = a_;
  for (auto& x : v) x = -x;
  return FE(field_, std::move(v));
}

FE FE::operator*(const FE& o) const {
  check_same_field(*this, o);
  std::vector<Rat> v(a_.size() + o.a_.size(), Rat(0));
  for (size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] == 0) continue;
    for (size_t j = 0; j < o.a_.size(); ++j) v[i + j] += a_[i] * o.a_[j];
  }
  return FE(field_, std::move(v));
}

FE FE::inv() const {
  if (is_zero()) fail(ErrCode::DivisionByZero, "inverse of zero field element");
  // extended Euclid in Q[t]: u*rep + v*min = gcd = const
  RatPoly r0 = field_->min_poly();
  RatPoly r1{std::vector<Rat>(a_)};
  RatPoly s0 = RatPoly::constant(Rat(0)), s1 = RatPoly::constant(Rat(1));
  while (r1.deg() > 0) {
    RatPoly q, r;
    rp_divmod(r0, r1, q, r);
    RatPoly s = rp_sub(s0, rp_mul(q, s1));
    r0 = r1; r1 = r;
    s0 = s1; s1 = s;
  }
  // r1 is a nonzero constant (min_poly irreducible)
  Rat c = r1.c.empty() ? Rat(0) : r1.c[0];
  if (c == 0) fail(ErrCode::DivisionByZero, "non-invertible element (internal)");
  RatPoly u = rp_scale(s1, Rat(1) / c);
  return FE(field_, u.c);
}

FE FE::operator/(const FE& o) const { return *this * o.inv(); }

FE FE::pow(unsigned n) const {
  FE acc = FE::one(field_), base = *this;
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool FE::operator==(const FE& o) const {
  check_same_field(*this, o);
  return a_ == o.a_;
}

bool FE::operator<(const FE& o) const {
  for (size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] != o.a_[i]) return a_[i] < o.a_[i];
  }
  return false;
}

std::string FE::str() const {
  return RatPoly(std::vector<Rat>(a_)).str("t");
}

FE fe_scale(const FE& x, const Rat& r) {
  std::vector<Rat> v = x.coeffs();
  for (auto& e : v) e *= r;
  return FE(x.field(), std::move(v));
}

namespace {

// Is d (rational) a square in K? Constructive via quadratic subfield generators.
std::optional<FE> sqrt_rational_in(const FieldPtr& K, const Rat& d) {
  Rat rt;
  if (rat_is_square(d, &rt)) return FE::of(K, rt);
  for (const auto& [gen_coeffs, D] : K->quad_subfield_gens()) {
    Rat ratio = d / D;
    if (rat_is_square(ratio, &rt)) {
      FE g(K, std::vector<Rat>(gen_coeffs));
      return fe_scale(g, rt);
    }
  }
  if (K->degree() == 1 || K->degree() == 3) return std::nullopt;  // no quadratic subfield
  if (K->degree() == 2) return std::nullopt;  // only subfield handled above
  // degree 4 of supported shape: subfield list is exhaustive
  const RatPoly& m = K->min_poly();
  if (m.c[3] == 0 && m.c[1] == 0) return std::nullopt;
  fail(ErrCode::Undecidable, "square test in unsupported quartic field shape");
}

// Solve A r^2 + B r + C = 0 over Q, returning all rational roots.
std::vector<Rat> solve_quadratic_rational(const Rat& A, const Rat& B, const Rat& C) {
  std::vector<Rat> out;
  if (A == 0) {
    if (B != 0) out.push_back(-C / B);
    return out;
  }
  Rat disc = B * B - 4 * A * C, s;
  if (!rat_is_square(disc, &s)) return out;
  out.push_back((-B + s) / (2 * A));
  if (s != 0) out.push_back((-B - s) / (2 * A));
  return out;
}

}  // namespace

std::optional<FE> sqrt_in_field(const FE& d) {
  const FieldPtr& K = d.field();
  if (d.is_zero()) return FE::zero(K);
  if (d.is_rational()) return sqrt_rational_in(K, d.rational_value());
  int n = K->degree();
  if (n == 2) {
    // d = u + v t, t^2 = -bt - c. Work in the basis (1, w) with w = sqrt(b^2-4c) = 2t+b:
    // t = (w - b)/2, so d = (u - vb/2) + (v/2) w.
    Rat b = K->min_poly().c[1], c = K->min_poly().c[0];
    Rat D = b * b - 4 * c;
    Rat u = d.coeffs()[0] - d.coeffs()[1] * b / 2;
    Rat v = d.coeffs()[1] / 2;
    // z = x + y w, x^2 + D y^2 = u, 2xy = v  (v != 0 here since d not rational)
    Rat s;
    if (!rat_is_square(u * u - D * v * v, &s)) return std::nullopt;
    for (int sign : {1, -1}) {
      Rat x2 = (u + (sign > 0 ? s : -s)) / 2;
      Rat x;
      if (x2 > 0 && rat_is_square(x2, &x) && x != 0) {
        Rat y = v / (2 * x);
        // z = x + y(2t+b)
        FE z(K, {x + y * b, 2 * y});
        if (z * z == d) return z;
      }
    }
    return std::nullopt;
  }
  if (n == 3) fail(ErrCode::Undecidable, "square test for non-rational targets in cubic fields");
  // degree 4
  const RatPoly& m = K->min_poly();
  if (!(m.c[3] == 0 && m.c[1] == 0))
    fail(ErrCode::Undecidable, "square test in unsupported quartic field shape");
  Rat p = m.c[2], q = m.c[0];
  const auto& co = d.coeffs();
  bool even_only = (co[1] == 0 && co[3] == 0);
  bool odd_only = (co[0] == 0 && co[2] == 0);
  if (!even_only && !odd_only)
    fail(ErrCode::Undecidable, "square test for mixed-parity targets in quartic field");
  auto try_candidate = [&](const FE& z) -> std::optional<FE> {
    if (z * z == d) return z;
    return std::nullopt;
  };
  if (even_only) {
    Rat A = co[0], B = co[2];  // d = A + B t^2
    // even root z = x + y t^2: (x^2 - q y^2) + (2xy - p y^2) t^2 = A + B t^2
    {
      // y == 0 handled by rational path; assume y != 0, r = x/y:
      // y^2 (r^2 - q) = A, y^2 (2r - p) = B
      if (B != 0) {
        for (const Rat& r : solve_quadratic_rational(B, -2 * A, A * p - B * q)) {
          Rat den = 2 * r - p;
          if (den == 0) continue;
          Rat y2 = B / den, y;
          if (y2 > 0 && rat_is_square(y2, &y)) {
            FE z(K, {r * y, Rat(0), y, Rat(0)});
            if (auto res = try_candidate(z)) return res;
            z = FE(K, {-r * y, Rat(0), -y, Rat(0)});
            if (auto res = try_candidate(z)) return res;
          }
        }
      } else {
        // 2r = p: y^2 (p^2/4 - q) = A
        Rat den = p * p / 4 - q;
        if (den != 0) {
          Rat y2 = A / den, y;
          if (y2 > 0 && rat_is_square(y2, &y)) {
            FE z(K, {p / 2 * y, Rat(0), y, Rat(0)});
            if (auto res = try_candidate(z)) return res;
          }
        }
      }
    }
    // odd root z = (x + y t^2) t: z^2 = -q(2xy - py^2) + (x^2 - qy^2 - p(2xy - py^2)) t^2
    {
      Rat A1 = A, B1 = B;
      // equations: -q(2xy - p y^2) = A1;  x^2 - q y^2 - 2pxy + p^2 y^2 = B1
      // y = 0: A1 must be 0 and x^2 t^2 ... z = x t: z^2 = x^2 t^2: A1==0, B1 = x^2.
      if (A1 == 0) {
        Rat x;
        if (B1 > 0 && rat_is_square(B1, &x)) {
          FE z(K, {Rat(0), x, Rat(0), Rat(0)});
          if (auto res = try_candidate(z)) return res;
        }
      }
      if (q != 0) {
        // r = x/y: -q y^2 (2r - p) = A1, y^2 (r^2 - 2pr + p^2 - q) = B1
        // cross-multiplied: A1 (r^2 - 2pr + p^2 - q) + q B1 (2r - p) = 0
        for (const Rat& r : solve_quadratic_rational(A1, -2 * p * A1 + 2 * q * B1,
                                                     A1 * (p * p - q) - p * q * B1)) {
          Rat den = -q * (2 * r - p);
          if (den == 0) continue;
          Rat y2 = A1 / den, y;
          if (y2 > 0 && rat_is_square(y2, &y)) {
            FE z(K, {Rat(0), r * y, Rat(0), y});
            if (auto res = try_candidate(z)) return res;
          }
        }
      }
    }
    return std::nullopt;
  }
  // odd_only target: z must be mixed (z_e z_o cross term); z = x t + y t^3 squared is even.
  // A product of even and odd parts is needed: z = a + b t with both nonzero never lands
  // odd-only cleanly; handle via: z^2 odd-only forces z_e^2 + z_o^2 = 0, impossible over
  // a real embedding but not in general; report undecided.
  fail(ErrCode::Undecidable, "square test for odd-parity targets in quartic field");
}

}  // namespace fibra
