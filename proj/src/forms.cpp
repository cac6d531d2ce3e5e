#include "fibra/forms.hpp"

#include <algorithm>
#include <sstream>

namespace fibra {

std::string base_name(BaseSurface b) { return b == BaseSurface::P2 ? "P2" : "P1xP1"; }

// ---------------- SurfPoint ----------------

void SurfPoint::canonicalize_() {
  auto scale_block = [&](size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) {
      if (!c_[i].is_zero()) {
        FE inv = c_[i].inv();
        for (size_t j = lo; j < hi; ++j) c_[j] = c_[j] * inv;
        return;
      }
    }
    fail(ErrCode::InvalidInput, "projective coordinates all zero");
  };
  if (base_ == BaseSurface::P2) {
    scale_block(0, 3);
  } else {
    scale_block(0, 2);
    scale_block(2, 4);
  }
}

SurfPoint SurfPoint::p2(const FieldPtr& K, FE X, FE Y, FE Z) {
  SurfPoint p;
  p.base_ = BaseSurface::P2;
  p.K_ = K;
  p.c_ = {std::move(X), std::move(Y), std::move(Z)};
  p.canonicalize_();
  return p;
}

SurfPoint SurfPoint::p2_affine(const FieldPtr& K, const FE& x, const FE& y) {
  return p2(K, x, y, FE::one(K));
}

SurfPoint SurfPoint::p1xp1(const FieldPtr& K, FE u0, FE u1, FE v0, FE v1) {
  SurfPoint p;
  p.base_ = BaseSurface::P1xP1;
  p.K_ = K;
  p.c_ = {std::move(u0), std::move(u1), std::move(v0), std::move(v1)};
  p.canonicalize_();
  return p;
}

SurfPoint SurfPoint::p1xp1_xy(const FieldPtr& K, const std::optional<FE>& x,
                              const std::optional<FE>& y) {
  FE one = FE::one(K), zero = FE::zero(K);
  FE u0 = x ? one : zero, u1 = x ? *x : one;
  FE v0 = y ? one : zero, v1 = y ? *y : one;
  return p1xp1(K, u0, u1, v0, v1);
}

SurfPoint SurfPoint::infinitely_near(const SurfPoint& parent, FE d0, FE d1) {
  SurfPoint p = parent;
  InfNear in;
  in.parent = std::make_shared<SurfPoint>(parent);
  if (d0.is_zero() && d1.is_zero()) fail(ErrCode::InvalidInput, "zero tangent direction");
  // normalize direction: first nonzero coordinate to 1
  FE s = !d0.is_zero() ? d0.inv() : d1.inv();
  in.d0 = d0 * s;
  in.d1 = d1 * s;
  in.level = parent.level() + 1;
  p.inf_ = std::move(in);
  return p;
}

bool SurfPoint::operator==(const SurfPoint& o) const {
  if (base_ != o.base_ || c_.size() != o.c_.size()) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (!(c_[i] == o.c_[i])) return false;
  if (inf_.has_value() != o.inf_.has_value()) return false;
  if (inf_) {
    if (inf_->level != o.inf_->level) return false;
    if (!(inf_->d0 == o.inf_->d0) || !(inf_->d1 == o.inf_->d1)) return false;
    if (!(*inf_->parent == *o.inf_->parent)) return false;
  }
  return true;
}

bool SurfPoint::operator<(const SurfPoint& o) const {
  if (level() != o.level()) return level() < o.level();
  for (size_t i = 0; i < std::min(c_.size(), o.c_.size()); ++i) {
    if (!(c_[i] == o.c_[i])) return c_[i] < o.c_[i];
  }
  if (inf_ && o.inf_) {
    if (!(inf_->d0 == o.inf_->d0)) return inf_->d0 < o.inf_->d0;
    if (!(inf_->d1 == o.inf_->d1)) return inf_->d1 < o.inf_->d1;
  }
  return false;
}

std::string SurfPoint::str() const {
  std::ostringstream os;
  auto coord = [&](const FE& num, const FE& den) -> std::string {
    if (den.is_zero()) return "inf";
    return (num / den).str();
  };
  if (base_ == BaseSurface::P2) {
    if (!c_[2].is_zero())
      os << "(" << (c_[0] / c_[2]).str() << ", " << (c_[1] / c_[2]).str() << ")";
    else
      os << "(" << c_[0].str() << " : " << c_[1].str() << " : 0)";
  } else {
    os << "(" << coord(c_[1], c_[0]) << ", " << coord(c_[3], c_[2]) << ")";
  }
  if (inf_) {
    os << "[inf.near lvl " << inf_->level << " of " << inf_->parent->str() << " dir ("
       << inf_->d0.str() << ":" << inf_->d1.str() << ")]";
  }
  return os.str();
}

// ---------------- Form ----------------

Form Form::from_affine(BaseSurface base, const BiPoly& affine, int da, int db) {
  if (affine.is_zero()) fail(ErrCode::ZeroInput, "zero form");
  Form f;
  f.base_ = base;
  f.K_ = affine.field();
  f.f_ = affine;
  f.da_ = da;
  f.db_ = db;
  if (base == BaseSurface::P1xP1) {
    if (affine.deg_x() > da || affine.deg_y() > db)
      fail(ErrCode::DegreeOverflow,
           "monomial exceeds declared bidegree (" + std::to_string(da) + "," +
               std::to_string(db) + ")");
  } else {
    if (affine.total_deg() > da)
      fail(ErrCode::DegreeOverflow,
           "monomial exceeds declared degree " + std::to_string(da));
    f.db_ = 0;
  }
  return f;
}

Form Form::parse(const std::string& expr, BaseSurface base, const FieldPtr& K, int da,
                 int db) {
  BiPoly p = parse_affine_expr(expr, K);
  if (p.is_zero())
    fail(ErrCode::ParseError, "curve expression \"" + expr + "\" is identically zero");
  return from_affine(base, p, da, db);
}

Form parse_and_homogenize(const std::string& expr, BaseSurface base, const FieldPtr& K,
                          int da, int db) {
  return Form::parse(expr, base, K, da, db);
}

Form Form::fiber(const FieldPtr& K, int axis, const std::optional<FE>& at) {
  BiPoly v = axis == 0 ? BiPoly::var_x(K) : BiPoly::var_y(K);
  BiPoly p = at ? (v - BiPoly::constant(*at)) : BiPoly::constant(FE::one(K));
  return Form::from_affine(BaseSurface::P1xP1, p, axis == 0 ? 1 : 0, axis == 0 ? 0 : 1);
}

BiPoly Form::chart_poly(int chart) const {
  BiPoly r(K_);
  if (base_ == BaseSurface::P1xP1) {
    bool x_inf = chart == 1 || chart == 3;
    bool y_inf = chart == 2 || chart == 3;
    for (auto& [k, v] : f_.terms()) {
      int i = x_inf ? da_ - k.first : k.first;
      int j = y_inf ? db_ - k.second : k.second;
      r.set_coeff(i, j, r.coeff(i, j) + v);
    }
  } else {
    for (auto& [k, v] : f_.terms()) {
      int i = k.first, j = k.second, kk = da_ - i - j;
      int a, b;
      if (chart == 0) { a = i; b = j; }        // (x, y)
      else if (chart == 1) { a = j; b = kk; }  // X=1: (y, z)
      else { a = i; b = kk; }                  // Y=1: (x, z)
      r.set_coeff(a, b, r.coeff(a, b) + v);
    }
  }
  return r;
}

std::pair<int, std::pair<FE, FE>> Form::chart_of(const SurfPoint& p) {
  const FieldPtr& K = p.field();
  const auto& c = p.coords();
  if (p.base() == BaseSurface::P1xP1) {
    bool x_fin = !c[0].is_zero(), y_fin = !c[2].is_zero();
    int chart = (x_fin ? 0 : 1) + (y_fin ? 0 : 2);
    FE cx = x_fin ? c[1] / c[0] : c[0] / c[1];
    FE cy = y_fin ? c[3] / c[2] : c[2] / c[3];
    return {chart, {cx, cy}};
  }
  if (!c[2].is_zero()) return {0, {c[0] / c[2], c[1] / c[2]}};
  if (!c[0].is_zero()) return {1, {c[1] / c[0], c[2] / c[0]}};
  return {2, {c[0] / c[1], c[2] / c[1]}};
}

std::optional<std::pair<FE, FE>> Form::coords_in_chart(const SurfPoint& p, int chart) {
  const auto& c = p.coords();
  if (p.base() == BaseSurface::P1xP1) {
    bool x_inf = chart == 1 || chart == 3;
    bool y_inf = chart == 2 || chart == 3;
    const FE& xden = x_inf ? c[1] : c[0];
    const FE& yden = y_inf ? c[3] : c[2];
    if (xden.is_zero() || yden.is_zero()) return std::nullopt;
    FE cx = (x_inf ? c[0] : c[1]) / xden;
    FE cy = (y_inf ? c[2] : c[3]) / yden;
    return std::make_pair(cx, cy);
  }
  // P2: chart 0 = {Z=1}: (x,y); 1 = {X=1}: (y,z); 2 = {Y=1}: (x,z)
  int den_idx = chart == 0 ? 2 : (chart == 1 ? 0 : 1);
  if (c[den_idx].is_zero()) return std::nullopt;
  FE inv = c[den_idx].inv();
  if (chart == 0) return std::make_pair(c[0] * inv, c[1] * inv);
  if (chart == 1) return std::make_pair(c[1] * inv, c[2] * inv);
  return std::make_pair(c[0] * inv, c[2] * inv);
}

BiPoly Form::local_at(const SurfPoint& p) const {
  auto [chart, xy] = chart_of(p);
  return chart_poly(chart).translate(xy.first, xy.second);
}

FE Form::value_at(const SurfPoint& p) const {
  auto [chart, xy] = chart_of(p);
  return chart_poly(chart).eval(xy.first, xy.second);
}

bool Form::same_space(const Form& o) const {
  return base_ == o.base_ && K_ && o.K_ && *K_ == *o.K_;
}

long Form::bezout_with(const Form& o) const {
  if (base_ == BaseSurface::P2) return (long)da_ * o.da_;
  return (long)da_ * o.db_ + (long)db_ * o.da_;
}

bool Form::has_common_component(const Form& o) const {
  GcdResult g = squarefree_and_gcd(*this, &o);
  return !g.gcd_affine.is_constant() || g.shared_x_inf > 0 || g.shared_y_inf > 0;
}

bool Form::is_squarefree() const {
  GcdResult g = squarefree_and_gcd(*this);
  return g.is_squarefree_p;
}

Form Form::multiply(const Form& o) const {
  if (!same_space(o)) fail(ErrCode::InvalidInput, "forms on different surfaces");
  return from_affine(base_, f_ * o.f_, da_ + o.da_, db_ + o.db_);
}

Form Form::add(const Form& o) const {
  if (!same_space(o) || da_ != o.da_ || db_ != o.db_)
    fail(ErrCode::InvalidInput, "pencil combination of forms with different degrees");
  return from_affine(base_, f_ + o.f_, da_, db_);
}

Form Form::scale(const FE& s) const {
  if (s.is_zero()) fail(ErrCode::ZeroInput, "scaling a form by zero");
  return from_affine(base_, f_ * BiPoly::constant(s), da_, db_);
}

std::string Form::str() const {
  std::ostringstream os;
  os << base_name(base_) << " form ";
  if (base_ == BaseSurface::P1xP1) os << "(" << da_ << "," << db_ << ")";
  else os << "deg " << da_;
  os << ": " << f_.str();
  return os.str();
}

GcdResult squarefree_and_gcd(const Form& p, const Form* q) {
  GcdResult out;
  const BiPoly& f = p.affine();
  // squarefree: affine part squarefree and infinity-line multiplicities <= 1
  bool sf = bp_squarefree(f);
  if (p.base() == BaseSurface::P1xP1) {
    if (p.deg_a() - f.deg_x() > 1 || p.deg_b() - f.deg_y() > 1) sf = false;
  } else {
    if (p.deg_a() - f.total_deg() > 1) sf = false;
  }
  out.is_squarefree_p = sf;
  if (q) {
    out.gcd_affine = q->affine().is_zero() ? bp_normalized(f) : bp_gcd(f, q->affine());
    if (p.base() == BaseSurface::P1xP1) {
      out.shared_x_inf =
          std::min(p.deg_a() - f.deg_x(), q->deg_a() - q->affine().deg_x());
      out.shared_y_inf =
          std::min(p.deg_b() - f.deg_y(), q->deg_b() - q->affine().deg_y());
    } else {
      out.shared_x_inf =
          std::min(p.deg_a() - f.total_deg(), q->deg_a() - q->affine().total_deg());
    }
  } else {
    out.gcd_affine = bp_normalized(f);
  }
  return out;
}

// ---------------- strict transforms and multiplicity ----------------

namespace {

// One blow-up step of a local polynomial: the infinitely near point sits in
// direction (d0:d1); returns the strict transform with that point at the origin.
BiPoly blowup_strict(const BiPoly& f, const FE& d0, const FE& d1) {
  const FieldPtr& K = f.field();
  int m = f.min_total_deg();
  if (!d0.is_zero()) {
    FE beta = d1 / d0;
    // x = s, y = s*(beta + w): coords (s, w)
    BiPoly s = BiPoly::var_x(K), w = BiPoly::var_y(K);
    BiPoly g = f.subst(s, s * (w + BiPoly::constant(beta)));
    return g.divexact_xpow(m);
  }
  // direction (0:1): x = s*w, y = s with w centered at 0
  BiPoly s = BiPoly::var_x(K), w = BiPoly::var_y(K);
  BiPoly g = f.subst(s * w, s);
  return g.divexact_xpow(m);
}

}  // namespace

BiPoly strict_local_at(const Form& curve, const SurfPoint& p) {
  if (!p.is_infinitely_near()) return curve.local_at(p);
  // walk the chain from the root
  std::vector<const SurfPoint*> chain;
  const SurfPoint* cur = &p;
  while (cur->is_infinitely_near()) {
    chain.push_back(cur);
    cur = cur->inf_data().parent.get();
  }
  BiPoly f = curve.local_at(*cur);
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    if (f.is_zero() || f.min_total_deg() == 0) {
      // curve does not pass through the intermediate point; strict transform
      // misses everything above it
      return BiPoly::constant(FE::one(curve.field()));
    }
    f = blowup_strict(f, (*it)->inf_data().d0, (*it)->inf_data().d1);
  }
  return f;
}

int mult_at(const Form& curve, const SurfPoint& p) {
  BiPoly f = strict_local_at(curve, p);
  if (f.is_zero()) fail(ErrCode::ZeroCurve, "multiplicity of the zero curve");
  return f.min_total_deg();
}

// ---------------- binary form factorization ----------------

bool ConeFactor::same_factor(const ConeFactor& o) const {
  if (kind != o.kind) return false;
  if (kind == Kind::Line) return la == o.la && lb == o.lb;
  return qa == o.qa && qb == o.qb && qc == o.qc;
}

std::string ConeFactor::str() const {
  std::ostringstream os;
  if (kind == Kind::Line)
    os << "(" << la.str() << ")*x + (" << lb.str() << ")*y";
  else
    os << "(" << qa.str() << ")*x^2 + (" << qb.str() << ")*xy + (" << qc.str() << ")*y^2";
  if (mult > 1) os << " ^" << mult;
  return os.str();
}

namespace {

ConeFactor make_line(const FE& a, const FE& b, int mult) {
  ConeFactor f;
  f.kind = ConeFactor::Kind::Line;
  FE s = !a.is_zero() ? a.inv() : b.inv();
  f.la = a * s;
  f.lb = b * s;
  f.mult = mult;
  return f;
}

}  // namespace

std::vector<ConeFactor> factor_binary_form(const BiPoly& cone) {
  if (cone.is_zero()) fail(ErrCode::ZeroInput, "factor of zero form");
  const FieldPtr& K = cone.field();
  int D = cone.total_deg();
  if (cone.min_total_deg() != D)
    fail(ErrCode::InvalidInput, "factor_binary_form needs a homogeneous input");
  std::vector<ConeFactor> out;
  // u(x) = cone(x, 1); the deficiency in degree is a power of the line y = 0
  // (direction (1:0)).
  UPoly u = cone.eval_y(FE::one(K));
  int ydef = D - u.deg();
  if (ydef > 0) out.push_back(make_line(FE::zero(K), FE::one(K), ydef));
  if (u.deg() >= 1) {
    for (auto& [factor0, mult] : up_squarefree_decomposition(u)) {
      UPoly g = factor0;
      // peel off roots lying in K (rational candidates cover the corpus'
      // higher-degree cones; quadratics are decided below)
      while (g.deg() > 2) {
        bool found = false;
        if ([&] {
              for (auto& c : g.c)
                if (!c.is_rational()) return false;
              return true;
            }()) {
          RatPoly rp;
          for (auto& c : g.c) rp.c.push_back(c.rational_value());
          rp.trim();
          auto rr = rational_roots(rp);
          if (!rr.empty()) {
            FE r = FE::of(K, rr.front());
            out.push_back(make_line(FE::one(K), -r, mult));
            g = up_divexact(g, UPoly(K, {-r, FE::one(K)}));
            found = true;
          }
        }
        if (!found) break;
      }
      if (g.deg() == 0) continue;
      if (g.deg() == 1) {
        // root r = -c0/c1: direction (r:1), line x - r y
        FE r = -(g.c[0] / g.c[1]);
        out.push_back(make_line(FE::one(K), -r, mult));
        continue;
      }
      if (g.deg() == 2) {
        FE a = g.c[2], b = g.c[1], c = g.c[0];
        FE disc = b * b - fe_scale(a * c, Rat(4));
        std::optional<FE> root;
        try {
          root = sqrt_in_field(disc);
        } catch (const Error& e) {
          if (e.code() != ErrCode::Undecidable) throw;
          fail(ErrCode::UnsplitTangentCone,
               "cannot decide splitting of quadratic cone factor " + g.str());
        }
        if (root) {
          FE r1 = (-b + *root) / fe_scale(a, Rat(2));
          FE r2 = (-b - *root) / fe_scale(a, Rat(2));
          out.push_back(make_line(FE::one(K), -r1, mult));
          out.push_back(make_line(FE::one(K), -r2, mult));
        } else {
          ConeFactor f;
          f.kind = ConeFactor::Kind::IrreducibleQuadratic;
          FE ai = a.inv();
          f.qa = FE::one(K);
          f.qb = b * ai;
          f.qc = c * ai;
          f.mult = mult;
          out.push_back(f);
        }
        continue;
      }
      fail(ErrCode::UnsplitTangentCone,
           "tangent-cone factor of degree " + std::to_string(g.deg()) +
               " does not split over the working field: " + g.str());
    }
  }
  return out;
}

ConeSummary cone_summary(const BiPoly& cone) {
  if (cone.is_zero()) fail(ErrCode::ZeroInput, "summary of zero form");
  const FieldPtr& K = cone.field();
  ConeSummary out;
  out.degree = cone.total_deg();
  if (cone.min_total_deg() != out.degree)
    fail(ErrCode::InvalidInput, "cone_summary needs a homogeneous input");
  UPoly u = cone.eval_y(FE::one(K));
  int ydef = out.degree - u.deg();
  int dist = ydef > 0 ? 1 : 0;
  if (u.deg() >= 1) dist += up_squarefree_part(u).deg();
  out.distinct = dist;
  out.squarefree = (ydef <= 1) && (u.deg() < 1 || up_squarefree_part(u).deg() == u.deg());
  return out;
}

}  // namespace fibra
