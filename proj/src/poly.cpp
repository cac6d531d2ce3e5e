#include "fibra/poly.hpp"

#include <algorithm>
#include <sstream>

namespace fibra {

UPoly UPoly::constant(const FE& v) { return UPoly(v.field(), {v}); }

void UPoly::trim() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

FE UPoly::at(int i) const {
  if (i < 0 || i >= (int)c.size()) return FE::zero(K);
  return c[i];
}

bool UPoly::operator==(const UPoly& o) const {
  if (c.size() != o.c.size()) return false;
  for (size_t i = 0; i < c.size(); ++i)
    if (!(c[i] == o.c[i])) return false;
  return true;
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg(); i >= 0; --i) {
    if (c[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c[i].str() << ")";
    if (i >= 1) os << "*" << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

UPoly up_add(const UPoly& a, const UPoly& b) {
  const FieldPtr& K = a.K ? a.K : b.K;
  std::vector<FE> v(std::max(a.c.size(), b.c.size()), FE::zero(K));
  for (size_t i = 0; i < a.c.size(); ++i) v[i] = v[i] + a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) v[i] = v[i] + b.c[i];
  return UPoly(K, std::move(v));
}

UPoly up_sub(const UPoly& a, const UPoly& b) {
  const FieldPtr& K = a.K ? a.K : b.K;
  std::vector<FE> v(std::max(a.c.size(), b.c.size()), FE::zero(K));
  for (size_t i = 0; i < a.c.size(); ++i) v[i] = v[i] + a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) v[i] = v[i] - b.c[i];
  return UPoly(K, std::move(v));
}

UPoly up_mul(const UPoly& a, const UPoly& b) {
  const FieldPtr& K = a.K ? a.K : b.K;
  if (a.is_zero() || b.is_zero()) return UPoly(K);
  std::vector<FE> v(a.c.size() + b.c.size() - 1, FE::zero(K));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (size_t j = 0; j < b.c.size(); ++j) v[i + j] = v[i + j] + a.c[i] * b.c[j];
  }
  return UPoly(K, std::move(v));
}

UPoly up_scale(const UPoly& a, const FE& s) {
  if (s.is_zero()) return UPoly(a.K);
  std::vector<FE> v = a.c;
  for (auto& x : v) x = x * s;
  return UPoly(a.K, std::move(v));
}

UPoly up_shift(const UPoly& a, int k) {
  if (a.is_zero()) return a;
  std::vector<FE> v(a.c.size() + k, FE::zero(a.K));
  for (size_t i = 0; i < a.c.size(); ++i) v[i + k] = a.c[i];
  return UPoly(a.K, std::move(v));
}

void up_divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) fail(ErrCode::DivisionByZero, "polynomial division by zero");
  const FieldPtr& K = a.K ? a.K : b.K;
  r = a;
  q = UPoly(K);
  if (a.deg() >= b.deg()) q.c.assign(a.deg() - b.deg() + 1, FE::zero(K));
  FE binv = b.lead().inv();
  while (!r.is_zero() && r.deg() >= b.deg()) {
    FE f = r.lead() * binv;
    int d = r.deg() - b.deg();
    q.c[d] = q.c[d] + f;
    for (int i = 0; i <= b.deg(); ++i) r.c[i + d] = r.c[i + d] - f * b.c[i];
    r.trim();
  }
  q.trim();
}

UPoly up_divexact(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  up_divmod(a, b, q, r);
  if (!r.is_zero()) fail(ErrCode::InvalidInput, "inexact polynomial division");
  return q;
}

UPoly up_gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly q, r;
    up_divmod(x, y, q, r);
    x = y;
    y = r;
    if (!x.is_zero()) x = up_monic(x);  // keep coefficients tame
  }
  if (!x.is_zero()) x = up_monic(x);
  return x;
}

UPoly up_derivative(const UPoly& a) {
  if (a.deg() < 1) return UPoly(a.K);
  std::vector<FE> v(a.deg(), FE::zero(a.K));
  for (int i = 1; i <= a.deg(); ++i) v[i - 1] = fe_scale(a.c[i], Rat(i));
  return UPoly(a.K, std::move(v));
}

FE up_eval(const UPoly& a, const FE& x) {
  FE acc = FE::zero(a.K ? a.K : x.field());
  for (int i = a.deg(); i >= 0; --i) acc = acc * x + a.c[i];
  return acc;
}

UPoly up_monic(const UPoly& a) {
  if (a.is_zero()) return a;
  return up_scale(a, a.lead().inv());
}

int up_order_at(const UPoly& a, const FE& x0) {
  if (a.is_zero()) fail(ErrCode::ZeroInput, "order of the zero polynomial");
  UPoly p = up_translate(a, x0);
  int k = 0;
  while (k <= p.deg() && p.c[k].is_zero()) ++k;
  return k;
}

UPoly up_translate(const UPoly& a, const FE& sh) {
  // Horner: p(x+sh)
  const FieldPtr& K = a.K;
  UPoly acc(K);
  UPoly lin(K, {sh, FE::one(K)});
  for (int i = a.deg(); i >= 0; --i) {
    acc = up_mul(acc, lin);
    acc = up_add(acc, UPoly::constant(a.c[i]));
  }
  return acc;
}

UPoly up_squarefree_part(const UPoly& a) {
  if (a.deg() < 1) return up_monic(a);
  UPoly g = up_gcd(a, up_derivative(a));
  return up_monic(up_divexact(a, g));
}

std::vector<std::pair<UPoly, int>> up_squarefree_decomposition(const UPoly& a0) {
  std::vector<std::pair<UPoly, int>> out;
  UPoly a = up_monic(a0);
  if (a.deg() < 1) return out;
  UPoly g = up_gcd(a, up_derivative(a));
  UPoly w = up_divexact(a, g);
  int i = 1;
  while (w.deg() >= 1) {
    UPoly y = up_gcd(w, g);
    UPoly f = up_divexact(w, y);
    if (f.deg() >= 1) out.push_back({up_monic(f), i});
    w = y;
    g = up_divexact(g, y);
    ++i;
  }
  return out;
}

// ---------------- BiPoly ----------------

BiPoly BiPoly::constant(const FE& v) {
  BiPoly p(v.field());
  p.add_term(0, 0, v);
  return p;
}
BiPoly BiPoly::var_x(const FieldPtr& K) { return monomial(FE::one(K), 1, 0); }
BiPoly BiPoly::var_y(const FieldPtr& K) { return monomial(FE::one(K), 0, 1); }
BiPoly BiPoly::monomial(const FE& v, int i, int j) {
  BiPoly p(v.field());
  p.add_term(i, j, v);
  return p;
}

void BiPoly::add_term(int i, int j, const FE& v) {
  if (v.is_zero()) return;
  auto key = Key{i, j};
  auto it = t_.find(key);
  if (it == t_.end()) {
    t_.emplace(key, v);
  } else {
    it->second = it->second + v;
    if (it->second.is_zero()) t_.erase(it);
  }
}

bool BiPoly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first == Key{0, 0});
}

int BiPoly::deg_x() const {
  int d = -1;
  for (auto& [k, v] : t_) d = std::max(d, k.first);
  return d;
}
int BiPoly::deg_y() const {
  int d = -1;
  for (auto& [k, v] : t_) d = std::max(d, k.second);
  return d;
}
int BiPoly::total_deg() const {
  int d = -1;
  for (auto& [k, v] : t_) d = std::max(d, k.first + k.second);
  return d;
}
int BiPoly::min_total_deg() const {
  if (t_.empty()) fail(ErrCode::ZeroCurve, "multiplicity of the zero polynomial");
  int d = 1 << 30;
  for (auto& [k, v] : t_) d = std::min(d, k.first + k.second);
  return d;
}

FE BiPoly::coeff(int i, int j) const {
  auto it = t_.find(Key{i, j});
  return it == t_.end() ? FE::zero(K_) : it->second;
}

void BiPoly::set_coeff(int i, int j, const FE& v) {
  t_.erase(Key{i, j});
  add_term(i, j, v);
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r = *this;
  if (!r.K_) r.K_ = o.K_;
  for (auto& [k, v] : o.t_) r.add_term(k.first, k.second, v);
  return r;
}
BiPoly BiPoly::operator-(const BiPoly& o) const {
  BiPoly r = *this;
  if (!r.K_) r.K_ = o.K_;
  for (auto& [k, v] : o.t_) r.add_term(k.first, k.second, -v);
  return r;
}
BiPoly BiPoly::operator-() const {
  BiPoly r(K_);
  for (auto& [k, v] : t_) r.t_.emplace(k, -v);
  return r;
}
BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r(K_ ? K_ : o.K_);
  for (auto& [k1, v1] : t_)
    for (auto& [k2, v2] : o.t_)
      r.add_term(k1.first + k2.first, k1.second + k2.second, v1 * v2);
  return r;
}

BiPoly BiPoly::derivative_x() const {
  BiPoly r(K_);
  for (auto& [k, v] : t_)
    if (k.first >= 1) r.add_term(k.first - 1, k.second, fe_scale(v, Rat(k.first)));
  return r;
}
BiPoly BiPoly::derivative_y() const {
  BiPoly r(K_);
  for (auto& [k, v] : t_)
    if (k.second >= 1) r.add_term(k.first, k.second - 1, fe_scale(v, Rat(k.second)));
  return r;
}

FE BiPoly::eval(const FE& x, const FE& y) const {
  FE acc = FE::zero(K_ ? K_ : x.field());
  for (auto& [k, v] : t_) acc = acc + v * x.pow(k.first) * y.pow(k.second);
  return acc;
}

BiPoly BiPoly::subst(const BiPoly& px, const BiPoly& py) const {
  const FieldPtr& K = K_ ? K_ : px.field();
  // powers cache
  int dx = deg_x(), dy = deg_y();
  std::vector<BiPoly> xp(std::max(dx, 0) + 1), yp(std::max(dy, 0) + 1);
  xp[0] = BiPoly::constant(FE::one(K));
  for (int i = 1; i <= dx; ++i) xp[i] = xp[i - 1] * px;
  yp[0] = BiPoly::constant(FE::one(K));
  for (int j = 1; j <= dy; ++j) yp[j] = yp[j - 1] * py;
  BiPoly r(K);
  for (auto& [k, v] : t_) r = r + BiPoly::constant(v) * xp[k.first] * yp[k.second];
  return r;
}

BiPoly BiPoly::translate(const FE& a, const FE& b) const {
  const FieldPtr& K = K_;
  BiPoly px = BiPoly::var_x(K) + BiPoly::constant(a);
  BiPoly py = BiPoly::var_y(K) + BiPoly::constant(b);
  return subst(px, py);
}

BiPoly BiPoly::divexact_xpow(int k) const {
  BiPoly r(K_);
  for (auto& [key, v] : t_) {
    if (key.first < k) fail(ErrCode::InvalidInput, "inexact division by x^k");
    r.t_.emplace(Key{key.first - k, key.second}, v);
  }
  return r;
}

BiPoly BiPoly::swap_vars() const {
  BiPoly r(K_);
  for (auto& [key, v] : t_) r.t_.emplace(Key{key.second, key.first}, v);
  return r;
}

BiPoly BiPoly::lowest_form() const {
  int m = min_total_deg();
  return homogeneous_part(m);
}

BiPoly BiPoly::homogeneous_part(int d) const {
  BiPoly r(K_);
  for (auto& [key, v] : t_)
    if (key.first + key.second == d) r.t_.emplace(key, v);
  return r;
}

std::vector<UPoly> BiPoly::y_coeffs() const {
  int dy = std::max(deg_y(), -1);
  std::vector<UPoly> out(dy + 1, UPoly(K_));
  for (auto& [key, v] : t_) {
    UPoly& row = out[key.second];
    if ((int)row.c.size() <= key.first) row.c.resize(key.first + 1, FE::zero(K_));
    row.c[key.first] = v;
  }
  for (auto& row : out) row.trim();
  return out;
}

BiPoly BiPoly::from_y_coeffs(const FieldPtr& K, const std::vector<UPoly>& v) {
  BiPoly r(K);
  for (size_t j = 0; j < v.size(); ++j)
    for (int i = 0; i <= v[j].deg(); ++i) r.add_term(i, (int)j, v[j].c[i]);
  return r;
}

UPoly BiPoly::eval_x(const FE& x0) const {
  auto rows = y_coeffs();
  std::vector<FE> v;
  v.reserve(rows.size());
  for (auto& row : rows) v.push_back(up_eval(row, x0));
  return UPoly(K_, std::move(v));
}

UPoly BiPoly::eval_y(const FE& y0) const { return swap_vars().eval_x(y0); }

std::string BiPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")";
    if (it->first.first) os << "*x" << (it->first.first > 1 ? "^" + std::to_string(it->first.first) : "");
    if (it->first.second) os << "*y" << (it->first.second > 1 ? "^" + std::to_string(it->first.second) : "");
  }
  return os.str();
}

BiPoly bp_normalized(const BiPoly& p) {
  if (p.is_zero()) return p;
  const FE& lead = p.t_.begin()->second;
  BiPoly r(p.K_);
  FE inv = lead.inv();
  for (auto& [k, v] : p.t_) r.t_.emplace(k, v * inv);
  return r;
}

// ---------------- resultant ----------------

namespace {

// Bareiss fraction-free determinant over K[x].
UPoly det_bareiss(std::vector<std::vector<UPoly>> M, const FieldPtr& K) {
  int n = (int)M.size();
  if (n == 0) return UPoly::constant(FE::one(K));
  UPoly prev = UPoly::constant(FE::one(K));
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    // pivot
    if (M[k][k].is_zero()) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (!M[i][k].is_zero()) { piv = i; break; }
      if (piv < 0) return UPoly(K);  // zero determinant
      std::swap(M[k], M[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        UPoly num = up_sub(up_mul(M[i][j], M[k][k]), up_mul(M[i][k], M[k][j]));
        M[i][j] = up_divexact(num, prev);
      }
      M[i][k] = UPoly(K);
    }
    prev = M[k][k];
  }
  UPoly det = M[n - 1][n - 1];
  if (sign < 0) det = up_scale(det, FE::of(K, Rat(-1)));
  return det;
}

}  // namespace

UPoly resultant_y(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero() || q.is_zero()) fail(ErrCode::ZeroInput, "resultant of zero polynomial");
  const FieldPtr& K = p.field() ? p.field() : q.field();
  auto a = p.y_coeffs();  // degree m in y
  auto b = q.y_coeffs();  // degree n in y
  int m = (int)a.size() - 1, n = (int)b.size() - 1;
  if (m < 0 || n < 0) fail(ErrCode::ZeroInput, "resultant of zero polynomial");
  if (m == 0 && n == 0) return UPoly::constant(FE::one(K));
  // Sylvester matrix, q-rows first then p-rows, descending powers of y.
  int N = m + n;
  std::vector<std::vector<UPoly>> M(N, std::vector<UPoly>(N, UPoly(K)));
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) M[r][r + j] = b[n - j];
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) M[m + r][r + j] = a[m - j];
  return det_bareiss(std::move(M), K);
}

namespace {

// Content of p with respect to y: gcd over K[x] of the y-coefficients.
UPoly bp_content_y(const BiPoly& p) {
  UPoly g(p.field());
  for (auto& row : p.y_coeffs()) {
    if (row.is_zero()) continue;
    g = g.is_zero() ? up_monic(row) : up_gcd(g, row);
    if (g.deg() == 0) break;
  }
  return g;
}

BiPoly bp_divexact_upoly_x(const BiPoly& p, const UPoly& d) {
  auto rows = p.y_coeffs();
  for (auto& row : rows)
    if (!row.is_zero()) row = up_divexact(row, d);
  return BiPoly::from_y_coeffs(p.field(), rows);
}

// Pseudo-remainder of a by b in (K[x])[y].
BiPoly bp_prem_y(const BiPoly& a, const BiPoly& b) {
  const FieldPtr& K = a.field() ? a.field() : b.field();
  auto bc = b.y_coeffs();
  int db = (int)bc.size() - 1;
  UPoly blead = bc[db];
  BiPoly bl = BiPoly::from_y_coeffs(K, {blead});
  BiPoly r = a;
  while (!r.is_zero() && r.deg_y() >= db) {
    auto rc = r.y_coeffs();
    int dr = (int)rc.size() - 1;
    UPoly rlead = rc[dr];
    // r <- blead * r - rlead * y^(dr-db) * b
    BiPoly rl = BiPoly::from_y_coeffs(K, {rlead});
    BiPoly shift = BiPoly::monomial(FE::one(K), 0, dr - db);
    r = bl * r - rl * shift * b;
  }
  return r;
}

}  // namespace

BiPoly bp_gcd(const BiPoly& p0, const BiPoly& q0) {
  const FieldPtr& K = p0.field() ? p0.field() : q0.field();
  if (p0.is_zero()) return bp_normalized(q0);
  if (q0.is_zero()) return bp_normalized(p0);
  BiPoly p = p0, q = q0;
  // Orient: work in (K[x])[y]; if both are y-free, delegate to UPoly gcd in x.
  if (p.deg_y() == 0 && q.deg_y() == 0) {
    UPoly g = up_gcd(p.y_coeffs()[0], q.y_coeffs()[0]);
    return bp_normalized(BiPoly::from_y_coeffs(K, {g}));
  }
  if (p.deg_y() == 0 || q.deg_y() == 0) {
    // gcd divides the y-free one: gcd(content_y of other with the y-free poly)
    const BiPoly& yfree = p.deg_y() == 0 ? p : q;
    const BiPoly& other = p.deg_y() == 0 ? q : p;
    UPoly g = up_gcd(yfree.y_coeffs()[0], bp_content_y(other));
    return bp_normalized(BiPoly::from_y_coeffs(K, {g}));
  }
  UPoly cp = bp_content_y(p), cq = bp_content_y(q);
  BiPoly pp = bp_divexact_upoly_x(p, cp), qq = bp_divexact_upoly_x(q, cq);
  // primitive Euclid
  while (true) {
    if (qq.is_zero()) break;
    if (qq.deg_y() == 0) {
      // primitive and y-free means unit content in y -> gcd of primitive parts is 1
      qq = BiPoly::constant(FE::one(K));
      std::swap(pp, qq);
      break;
    }
    BiPoly r = bp_prem_y(pp, qq);
    if (!r.is_zero()) {
      UPoly cr = bp_content_y(r);
      r = bp_divexact_upoly_x(r, cr);
    }
    pp = qq;
    qq = r;
  }
  UPoly cg = up_gcd(cp, cq);
  BiPoly result = pp * BiPoly::from_y_coeffs(K, {cg});
  return bp_normalized(result);
}

bool bp_squarefree(const BiPoly& p) {
  if (p.is_zero()) return false;
  BiPoly g = bp_gcd(p, p.derivative_x());
  g = bp_gcd(g, p.derivative_y());
  return g.is_constant();
}

}  // namespace fibra
