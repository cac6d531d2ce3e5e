#include "fibra/arrangement.hpp"

#include <algorithm>
#include <sstream>

namespace fibra {

namespace {
constexpr int kShearLimit = 64;
}

long Arrangement::class_a() const {
  long a = 0;
  for (auto& c : components) a += (long)c.weight * c.curve.deg_a();
  return a;
}
long Arrangement::class_b() const {
  long b = 0;
  for (auto& c : components) b += (long)c.weight * c.curve.deg_b();
  return b;
}

const Arrangement::Component& Arrangement::find(const std::string& name) const {
  for (auto& c : components)
    if (c.name == name) return c;
  fail(ErrCode::InvalidInput, "unknown component " + name);
}

Form Arrangement::reduced_form() const {
  Form acc = components.front().curve;
  for (size_t i = 1; i < components.size(); ++i) acc = acc.multiply(components[i].curve);
  return acc;
}

void Arrangement::check_pairwise_coprime() const {
  for (size_t i = 0; i < components.size(); ++i)
    for (size_t j = i + 1; j < components.size(); ++j)
      if (components[i].curve.has_common_component(components[j].curve))
        fail(ErrCode::CommonComponent,
             "components " + components[i].name + " and " + components[j].name +
                 " share a factor");
}

int arrangement_mult_at(const Arrangement& arr, const SurfPoint& p) {
  int total = 0;
  for (auto& c : arr.components) total += c.weight * mult_at(c.curve, p);
  return total;
}

// ---------------- intersection multiplicity ----------------

namespace {

BiPoly shear(const BiPoly& f, const Rat& sigma, const FieldPtr& K) {
  // x -> x + sigma*y
  BiPoly x = BiPoly::var_x(K), y = BiPoly::var_y(K);
  return f.subst(x + BiPoly::constant(FE::of(K, sigma)) * y, y);
}

// Top form evaluated at (sigma, 1) nonzero <=> sheared poly keeps full
// y-degree with a constant leading coefficient.
bool shear_keeps_degree(const BiPoly& f, const Rat& sigma) {
  const FieldPtr& K = f.field();
  BiPoly top = f.homogeneous_part(f.total_deg());
  return !top.eval(FE::of(K, sigma), FE::one(K)).is_zero();
}

// gcd(f(0,y), g(0,y)) must be a nonzero pure power of y (all local common
// roots on the line x=0 concentrated at the origin).
bool line_concentrated(const BiPoly& f, const BiPoly& g) {
  UPoly fy = f.eval_x(FE::zero(f.field()));
  UPoly gy = g.eval_x(FE::zero(g.field()));
  if (fy.is_zero() || gy.is_zero()) return false;  // component along x=0
  UPoly h = up_gcd(fy, gy);
  for (int i = 0; i < h.deg(); ++i)
    if (!h.c[i].is_zero()) return false;
  return true;
}

}  // namespace

int intersection_mult(const Form& c1, const Form& c2, const SurfPoint& p) {
  if (c1.has_common_component(c2))
    fail(ErrCode::CommonComponent, "intersection multiplicity of curves sharing a factor");
  BiPoly f = strict_local_at(c1, p);
  BiPoly g = strict_local_at(c2, p);
  if (f.is_zero() || g.is_zero()) fail(ErrCode::ZeroCurve, "zero local polynomial");
  if (!f.eval(FE::zero(f.field()), FE::zero(f.field())).is_zero() ||
      !g.eval(FE::zero(g.field()), FE::zero(g.field())).is_zero())
    return 0;
  const FieldPtr& K = c1.field();
  for (int s = 0; s < kShearLimit; ++s) {
    Rat sigma(s);
    if (!shear_keeps_degree(f, sigma) || !shear_keeps_degree(g, sigma)) continue;
    BiPoly fs = shear(f, sigma, K), gs = shear(g, sigma, K);
    if (!line_concentrated(fs, gs)) continue;
    UPoly res = resultant_y(fs, gs);
    if (res.is_zero()) fail(ErrCode::CommonComponent, "vanishing resultant (shared factor)");
    return up_order_at(res, FE::zero(K));
  }
  fail(ErrCode::InvalidInput, "no valid shear found for intersection multiplicity");
}

CompletenessCert certify_complete(const Form& c1, const Form& c2,
                                  const std::vector<SurfPoint>& claimed) {
  if (c1.has_common_component(c2))
    fail(ErrCode::CommonComponent, "Bezout certificate for curves sharing a factor");
  for (size_t i = 0; i < claimed.size(); ++i)
    for (size_t j = i + 1; j < claimed.size(); ++j)
      if (claimed[i] == claimed[j])
        fail(ErrCode::InvalidInput, "claimed points are not distinct");
  CompletenessCert cert;
  cert.bezout_total = c1.bezout_with(c2);
  long sum = 0;
  for (auto& p : claimed) {
    int m = intersection_mult(c1, c2, p);
    cert.local_mults.push_back({p, m});
    sum += m;
  }
  if (sum < cert.bezout_total)
    fail(ErrCode::IncompleteList,
         "intersection list incomplete: found " + std::to_string(sum) + " of " +
             std::to_string(cert.bezout_total) + " (deficit " +
             std::to_string(cert.bezout_total - sum) + ")");
  if (sum > cert.bezout_total)
    fail(ErrCode::OverCount, "claimed intersection multiplicities exceed the Bezout total");
  cert.complete = true;
  return cert;
}

// ---------------- singularity classification ----------------

std::string sing_type_name(SingType t) {
  switch (t) {
    case SingType::Smooth: return "smooth";
    case SingType::OrdinaryDouble: return "ordinary_double";
    case SingType::OrdinaryTriple: return "ordinary_triple";
    case SingType::ThreeToThree: return "three_to_three";
    case SingType::OrdinaryQuadruple: return "ordinary_quadruple";
    case SingType::Other: return "other";
  }
  return "?";
}

namespace {

// Collect cone factors of the reduced arrangement at the point: the cone of a
// product is the product of the per-component cones.
std::vector<ConeFactor> arrangement_cone_factors(const Arrangement& arr,
                                                 const SurfPoint& p) {
  std::vector<ConeFactor> all;
  for (auto& c : arr.components) {
    BiPoly loc = strict_local_at(c.curve, p);
    if (loc.is_zero()) fail(ErrCode::ZeroCurve, "zero component");
    if (!loc.eval(FE::zero(arr.K), FE::zero(arr.K)).is_zero()) continue;
    BiPoly cone = loc.lowest_form();
    for (auto& f : factor_binary_form(cone)) {
      bool merged = false;
      for (auto& g : all)
        if (g.same_factor(f)) {
          g.mult += f.mult;
          merged = true;
          break;
        }
      if (!merged) all.push_back(f);
    }
  }
  return all;
}

int count_directions(const std::vector<ConeFactor>& fs) {
  int n = 0;
  for (auto& f : fs) n += f.directions();
  return n;
}

bool all_simple(const std::vector<ConeFactor>& fs) {
  for (auto& f : fs)
    if (f.mult != 1) return false;
  // distinct factors never share a root: lines are normalized-distinct,
  // irreducible quadratics are coprime to every line and to each other.
  // A line could still divide a listed quadratic only if the quadratic were
  // reducible, which factor_binary_form excludes.
  return true;
}

}  // namespace

SingularPointRecord classify_singularity(const Arrangement& arr, const SurfPoint& p) {
  SingularPointRecord rec;
  rec.point = p;
  for (auto& c : arr.components) {
    int m = mult_at(c.curve, p);
    if (m > 0) rec.component_mults[c.name] = m;
    rec.total_mult += c.weight * m;
  }
  if (rec.total_mult <= 1) {
    rec.type = SingType::Smooth;
    rec.tangent_directions = rec.total_mult;
    return rec;
  }
  BiPoly local = strict_local_at(arr.reduced_form(), p);
  BiPoly cone = local.lowest_form();
  ConeSummary cs = cone_summary(cone);
  rec.tangent_directions = cs.distinct;
  try {
    rec.cone_factors = arrangement_cone_factors(arr, p);
  } catch (const Error& e) {
    if (e.code() != ErrCode::UnsplitTangentCone) throw;
    // the gcd-certified counts above remain valid; factors stay empty
  }
  int m = rec.total_mult;
  if (cs.squarefree && cs.distinct == m) {
    rec.type = m == 2   ? SingType::OrdinaryDouble
               : m == 3 ? SingType::OrdinaryTriple
               : m == 4 ? SingType::OrdinaryQuadruple
                        : SingType::Other;
    if (rec.type == SingType::Other)
      rec.type_detail = "ordinary point of multiplicity " + std::to_string(m);
    return rec;
  }
  if (m == 3 && cs.distinct == 1) {
    // cone = l^3: the cube root is the squarefree part, a line over K
    auto fs = factor_binary_form(cone);  // degree-1 squarefree part: always splits
    const ConeFactor& l = fs.front();
    // direction of the line la*x + lb*y = 0 is (-lb : la)
    FE d0 = -l.lb, d1 = l.la;
    SurfPoint q = SurfPoint::infinitely_near(p, d0, d1);
    BiPoly g = strict_local_at(arr.reduced_form(), q);
    int m2 = (g.is_constant() || !g.eval(FE::zero(arr.K), FE::zero(arr.K)).is_zero())
                 ? 0
                 : g.min_total_deg();
    if (m2 == 3) {
      ConeSummary inner = cone_summary(g.lowest_form());
      if (inner.squarefree && inner.distinct == 3) {
        rec.type = SingType::ThreeToThree;
        return rec;
      }
      rec.type = SingType::Other;
      rec.type_detail = "triple point; one blow-up leaves a triple point with only " +
                        std::to_string(inner.distinct) + " distinct tangents";
      return rec;
    }
    rec.type = SingType::Other;
    rec.type_detail = "triple point with a single tangent; infinitely near multiplicity " +
                      std::to_string(m2);
    return rec;
  }
  rec.type = SingType::Other;
  std::ostringstream os;
  os << "multiplicity " << m << " with " << rec.tangent_directions
     << " distinct tangent directions";
  rec.type_detail = os.str();
  return rec;
}

// ---------------- strict transform smoothness ----------------

bool strict_transform_smooth_after_blowup(const Arrangement& arr,
                                          const std::vector<SurfPoint>& points,
                                          std::string* diag) {
  // The strict transform must be smooth and meet the exceptional line
  // transversally at simple points: equivalently the restriction to s = 0 has
  // only simple roots in either chart. A multiple root detects a singular
  // point of the strict transform on E, a tangency to E, or branches crossing
  // on E.
  Form red = arr.reduced_form();
  const FieldPtr& K = arr.K;
  for (auto& p : points) {
    BiPoly f = strict_local_at(red, p);
    if (f.is_zero() || f.min_total_deg() < 2) {
      if (diag) *diag = "point " + p.str() + " is not singular";
      return false;
    }
    int m = f.min_total_deg();
    BiPoly s = BiPoly::var_x(K), w = BiPoly::var_y(K);
    BiPoly gA = f.subst(s, s * w).divexact_xpow(m);
    UPoly rA = gA.eval_x(FE::zero(K));
    if (rA.is_zero()) {
      if (diag) *diag = "at " + p.str() + ": exceptional line inside the strict transform";
      return false;
    }
    if (rA.deg() >= 1 && up_squarefree_part(rA).deg() != rA.deg()) {
      if (diag)
        *diag = "at " + p.str() + ": non-transversal exceptional contact, restriction " +
                rA.str("w");
      return false;
    }
    // chart B: only the direction (0:1) at the origin is new
    BiPoly gB = f.subst(s * w, s).divexact_xpow(m);
    UPoly rB = gB.eval_x(FE::zero(K));
    if (rB.is_zero() || up_order_at(rB, FE::zero(K)) >= 2) {
      if (diag) *diag = "at " + p.str() + ": non-transversal contact in direction (0:1)";
      return false;
    }
    // residual singularities off E cannot appear: blowing up is an
    // isomorphism away from the point, and other centers are listed separately.
  }
  return true;
}

// ---------------- singular locus certification ----------------

namespace {

// Vanishing order of (x - x0) in u; divides it out.
int strip_root(UPoly& u, const FE& x0) {
  int k = up_order_at(u, x0);
  if (k > 0) {
    UPoly lin(u.K, {-x0, FE::one(u.K)});
    for (int i = 0; i < k; ++i) u = up_divexact(u, lin);
  }
  return k;
}

// Certify: all singular points of the curve `comp` lying in this chart are
// among `claimed_local` (chart-local coordinates). Returns the residual
// factor when certification fails.
bool chart_component_cert(const BiPoly& h0, const std::vector<std::pair<FE, FE>>& claimed_local,
                          const FieldPtr& K, std::string* residual) {
  if (h0.is_constant()) return true;
  for (int sh = 0; sh < kShearLimit; ++sh) {
    Rat sigma(sh);
    if (!shear_keeps_degree(h0, sigma)) continue;
    BiPoly h = shear(h0, sigma, K);
    BiPoly hx = h.derivative_x(), hy = h.derivative_y();
    // If a partial is identically zero the curve is a function of one variable;
    // its singular locus is governed by the other partial alone.
    UPoly G;
    if (hx.is_zero() && hy.is_zero()) return true;  // constant
    if (hy.is_zero()) {
      // h = u(x): singular locus = multiple roots of u
      UPoly u = h.y_coeffs()[0];
      G = up_gcd(u, up_derivative(u));
    } else if (hx.is_zero()) {
      // h = v(y) after shear: cannot happen once shear keeps degree; be safe
      continue;
    } else {
      UPoly r1 = resultant_y(h, hx);
      UPoly r2 = resultant_y(h, hy);
      if (r1.is_zero() || r2.is_zero()) continue;
      G = up_gcd(r1, r2);
    }
    bool ok = true;
    UPoly res = G;
    for (auto& [px, py] : claimed_local) {
      FE sx = px + fe_scale(py, sigma);  // sheared x-coordinate
      strip_root(res, sx);
      // line-wise completeness: all singular points with x = sx are claimed
      UPoly fy = h.eval_x(sx);
      UPoly fxy = hx.is_zero() ? UPoly(K) : hx.eval_x(sx);
      UPoly fyy = hy.is_zero() ? UPoly(K) : hy.eval_x(sx);
      UPoly gamma = fy;
      if (!fxy.is_zero()) gamma = up_gcd(gamma, fxy);
      if (!fyy.is_zero()) gamma = up_gcd(gamma, fyy);
      if (gamma.is_zero()) { ok = false; break; }  // curve contains the line
      // remove claimed y-roots on this line
      UPoly gres = gamma;
      for (auto& [qx, qy] : claimed_local) {
        FE qsx = qx + fe_scale(qy, sigma);
        if (qsx == sx) strip_root(gres, qy);
      }
      if (gres.deg() >= 1) {
        ok = false;
        if (residual) *residual = "unaccounted singular candidates on sheared line x=" +
                                   sx.str() + ": " + gres.str("y");
        break;
      }
    }
    if (!ok) continue;
    if (res.deg() >= 1) {
      if (residual)
        *residual = "unaccounted singular x-candidates (shear " + std::to_string(sh) +
                    "): " + res.str();
      continue;  // try another shear: candidates may be spurious collisions
    }
    return true;
  }
  return false;
}

}  // namespace

LocusCert singular_locus_certify(const Arrangement& arr,
                                 const std::vector<SurfPoint>& claimed) {
  LocusCert out;
  arr.check_pairwise_coprime();
  // (a) every claimed point is singular on the reduced divisor
  for (auto& p : claimed) {
    int m = arrangement_mult_at(arr, p);
    if (m < 2) {
      fail(ErrCode::IncompleteList,
           "claimed point " + p.str() + " has multiplicity " + std::to_string(m));
    }
  }
  // (b) pairwise intersections are Bezout-complete within the claimed list
  for (size_t i = 0; i < arr.components.size(); ++i) {
    for (size_t j = i + 1; j < arr.components.size(); ++j) {
      const Form& f = arr.components[i].curve;
      const Form& g = arr.components[j].curve;
      std::vector<SurfPoint> shared;
      for (auto& p : claimed)
        if (mult_at(f, p) > 0 && mult_at(g, p) > 0) shared.push_back(p);
      CompletenessCert c = certify_complete(f, g, shared);
      out.notes.push_back(arr.components[i].name + "*" + arr.components[j].name + " = " +
                          std::to_string(c.bezout_total) + " accounted");
    }
  }
  // (c) each component's own singular locus is within the claimed set
  int n_charts = arr.base == BaseSurface::P1xP1 ? 4 : 3;
  for (auto& comp : arr.components) {
    for (int chart = 0; chart < n_charts; ++chart) {
      BiPoly h = comp.curve.chart_poly(chart);
      std::vector<std::pair<FE, FE>> local;
      for (auto& p : claimed) {
        if (auto xy = Form::coords_in_chart(p, chart)) local.push_back(*xy);
      }
      std::string residual;
      if (!chart_component_cert(h, local, arr.K, &residual)) {
        fail(ErrCode::ComponentSingularityUnresolved,
             "component " + comp.name + " chart " + std::to_string(chart) + ": " +
                 (residual.empty() ? "unresolved singular locus" : residual));
      }
    }
  }
  out.ok = true;
  return out;
}

}  // namespace fibra
