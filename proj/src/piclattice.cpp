#include "fibra/piclattice.hpp"

#include <algorithm>
#include <sstream>

namespace fibra {

DivClass DivClass::operator+(const DivClass& o) const {
  if (!lat || !o.lat || !(lat == o.lat || lat->extends(*o.lat) || o.lat->extends(*lat)))
    fail(ErrCode::LatticeMismatch, "class arithmetic across lattices");
  const LatPtr& big = v.size() >= o.v.size() ? lat : o.lat;
  DivClass r = big->embed(*this);
  DivClass s = big->embed(o);
  for (size_t i = 0; i < r.v.size(); ++i) r.v[i] += s.v[i];
  return r;
}

DivClass DivClass::operator-(const DivClass& o) const { return *this + (o * -1); }

DivClass DivClass::operator*(long k) const {
  DivClass r = *this;
  for (auto& x : r.v) x *= k;
  return r;
}

bool DivClass::operator==(const DivClass& o) const { return v == o.v; }

long DivClass::dot(const DivClass& o) const { return lat->intersect(*this, o); }

std::string DivClass::str() const {
  std::ostringstream os;
  int br = lat->base_rank();
  if (br == 1) os << v[0] << "H";
  else os << "(" << v[0] << "," << v[1] << ")";
  for (size_t i = br; i < v.size(); ++i) {
    long c = v[i];
    if (c == 0) continue;
    os << (c > 0 ? "+" : "-") << (std::abs(c) != 1 ? std::to_string(std::abs(c)) : "")
       << "e[" << lat->slots()[i - br].label << "]";
  }
  return os.str();
}

LatPtr Lattice::make(BaseSurface base, FieldPtr K) {
  return LatPtr(new Lattice(base, std::move(K)));
}

LatPtr Lattice::blow_up(const SurfPoint& p, const std::string& label, int parent_slot) const {
  for (auto& s : slots_) {
    if (s.label == label) fail(ErrCode::DuplicatePoint, "slot label " + label + " already used");
    if (s.point == p) fail(ErrCode::DuplicatePoint, "point " + p.str() + " already blown up");
  }
  auto next = std::shared_ptr<Lattice>(new Lattice(base_, K_));
  next->slots_ = slots_;
  Slot s;
  s.label = label;
  s.point = p;
  s.level = p.level();
  s.parent = parent_slot;
  next->slots_.push_back(std::move(s));
  return next;
}

int Lattice::find_slot(const std::string& label) const {
  for (size_t i = 0; i < slots_.size(); ++i)
    if (slots_[i].label == label) return (int)i;
  return -1;
}

DivClass Lattice::zero() const {
  DivClass c;
  c.lat = shared_from_this();
  c.v.assign(rank(), 0);
  return c;
}

DivClass Lattice::base_class(long a, long b) const {
  DivClass c = zero();
  c.v[0] = a;
  if (base_rank() == 2) c.v[1] = b;
  return c;
}

DivClass Lattice::exc(int slot) const {
  DivClass c = zero();
  c.v[base_rank() + slot] = 1;
  return c;
}

DivClass Lattice::canonical() const {
  DivClass c = base_ == BaseSurface::P2 ? base_class(-3) : base_class(-2, -2);
  for (size_t i = 0; i < slots_.size(); ++i) c.v[base_rank() + i] = 1;
  return c;
}

bool Lattice::extends(const Lattice& ancestor) const {
  if (base_ != ancestor.base_ || slots_.size() < ancestor.slots_.size()) return false;
  for (size_t i = 0; i < ancestor.slots_.size(); ++i)
    if (slots_[i].label != ancestor.slots_[i].label) return false;
  return true;
}

DivClass Lattice::embed(const DivClass& c) const {
  if (!c.lat->extends(*this) && !extends(*c.lat))
    fail(ErrCode::LatticeMismatch, "class does not embed into this lattice");
  if (c.v.size() > (size_t)rank()) fail(ErrCode::LatticeMismatch, "class from a larger lattice");
  DivClass r = zero();
  std::copy(c.v.begin(), c.v.end(), r.v.begin());
  return r;
}

long Lattice::intersect(const DivClass& a0, const DivClass& b0) const {
  if (!a0.lat || !b0.lat) fail(ErrCode::LatticeMismatch, "classes without a lattice");
  if (a0.v.size() != b0.v.size() || a0.v.size() != (size_t)rank())
    fail(ErrCode::LatticeMismatch, "classes from different lattices");
  const auto& a = a0.v;
  const auto& b = b0.v;
  long acc = 0;
  if (base_ == BaseSurface::P2) acc = a[0] * b[0];
  else acc = a[0] * b[1] + a[1] * b[0];
  for (size_t i = base_rank(); i < a.size(); ++i) acc -= a[i] * b[i];
  return acc;
}

long Lattice::adjunction_genus(const DivClass& d) const {
  long dd = intersect(d, d);
  long dk = intersect(d, canonical());
  long twice = dd + dk;
  if (twice % 2 != 0) fail(ErrCode::InvalidInput, "non-integral adjunction genus");
  return twice / 2 + 1;
}

long Lattice::riemann_roch_chi(const DivClass& d) const {
  long dd = intersect(d, d);
  long dk = intersect(d, canonical());
  long twice = dd - dk;
  if (twice % 2 != 0) fail(ErrCode::InvalidInput, "non-integral Riemann-Roch value");
  return chi_structure_sheaf() + twice / 2;
}

std::pair<int, int> Lattice::signature() const {
  int n = rank();
  std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n, Rat(0)));
  if (base_ == BaseSurface::P2) M[0][0] = 1;
  else { M[0][1] = 1; M[1][0] = 1; }
  for (int i = base_rank(); i < n; ++i) M[i][i] = -1;
  // symmetric congruence diagonalization over Q
  int pos = 0, neg = 0;
  for (int k = 0; k < n; ++k) {
    if (M[k][k] == 0) {
      int j = -1;
      for (int i = k + 1; i < n; ++i)
        if (M[k][i] != 0) { j = i; break; }
      if (j < 0) continue;  // zero row: degenerate (cannot happen here)
      for (int i = 0; i < n; ++i) M[i][k] += M[i][j];
      for (int i = 0; i < n; ++i) M[k][i] += M[j][i];
    }
    Rat piv = M[k][k];
    if (piv > 0) ++pos;
    else if (piv < 0) ++neg;
    for (int i = k + 1; i < n; ++i) {
      if (M[i][k] == 0) continue;
      Rat f = M[i][k] / piv;
      for (int j = 0; j < n; ++j) M[i][j] -= f * M[k][j];
      for (int j = 0; j < n; ++j) M[j][i] -= f * M[j][k];
    }
  }
  return {pos, neg};
}

// ---------------- interpolation h^0 ----------------

namespace {

// Local polynomial of a global basis monomial in the chart of the point,
// translated so the point is at the origin.
BiPoly monomial_local(BaseSurface base, const FieldPtr& K, int da, int db, int i, int j,
                      const SurfPoint& p) {
  Form mono = Form::from_affine(base, BiPoly::monomial(FE::one(K), i, j), da, db);
  return mono.local_at(p);
}

}  // namespace

long h0_interpolation(BaseSurface base, const FieldPtr& K, int da, int db,
                      const std::vector<PointCondition>& conds) {
  // monomial basis
  std::vector<std::pair<int, int>> basis;
  if (base == BaseSurface::P1xP1) {
    for (int i = 0; i <= da; ++i)
      for (int j = 0; j <= db; ++j) basis.push_back({i, j});
  } else {
    for (int i = 0; i <= da; ++i)
      for (int j = 0; i + j <= da; ++j) basis.push_back({i, j});
  }
  std::vector<std::vector<FE>> rows;
  for (const auto& pc : conds) {
    if (pc.point.level() > 0)
      fail(ErrCode::UnsupportedDepth, "conditions must be rooted at base-surface points");
    if (pc.mult < 0 || pc.child_mult < 0)
      fail(ErrCode::InvalidInput, "negative multiplicities");
    // Expansions of all basis monomials at the point
    std::vector<BiPoly> locals;
    locals.reserve(basis.size());
    for (auto& [i, j] : basis) locals.push_back(monomial_local(base, K, da, db, i, j, pc.point));
    // parent rows: all coefficients of total degree < m1 vanish
    for (int d = 0; d < pc.mult; ++d) {
      for (int a = 0; a <= d; ++a) {
        std::vector<FE> row;
        row.reserve(basis.size());
        for (auto& L : locals) row.push_back(L.coeff(a, d - a));
        rows.push_back(std::move(row));
      }
    }
    if (pc.has_child) {
      if (pc.child_mult > pc.mult + 1)
        fail(ErrCode::UnsupportedDepth,
             "child multiplicity exceeding parent+1 is outside the supported proximity range");
      // child rows: coeff of s^(m1+a) w^b in L(blowup) for a+b < m2
      for (auto& L : locals) (void)L;
      std::vector<BiPoly> blown;
      blown.reserve(basis.size());
      const FE& d0 = pc.d0;
      const FE& d1 = pc.d1;
      for (auto& L : locals) {
        BiPoly s = BiPoly::var_x(K), w = BiPoly::var_y(K);
        if (!d0.is_zero()) {
          FE beta = d1 / d0;
          blown.push_back(L.subst(s, s * (w + BiPoly::constant(beta))));
        } else {
          blown.push_back(L.subst(s * w, s));
        }
      }
      for (int a = 0; a + 0 < pc.child_mult; ++a) {
        for (int b = 0; a + b < pc.child_mult; ++b) {
          std::vector<FE> row;
          row.reserve(basis.size());
          for (auto& B : blown) row.push_back(B.coeff(pc.mult + a, b));
          rows.push_back(std::move(row));
        }
      }
    }
  }
  // rank over K by Gaussian elimination
  size_t ncols = basis.size();
  int rank = 0;
  std::vector<std::vector<FE>> mat = std::move(rows);
  size_t rpos = 0;
  for (size_t col = 0; col < ncols && rpos < mat.size(); ++col) {
    size_t piv = rpos;
    while (piv < mat.size() && mat[piv][col].is_zero()) ++piv;
    if (piv == mat.size()) continue;
    std::swap(mat[rpos], mat[piv]);
    FE inv = mat[rpos][col].inv();
    for (size_t c = col; c < ncols; ++c) mat[rpos][c] = mat[rpos][c] * inv;
    for (size_t r = 0; r < mat.size(); ++r) {
      if (r == rpos || mat[r][col].is_zero()) continue;
      FE f = mat[r][col];
      for (size_t c = col; c < ncols; ++c) mat[r][c] = mat[r][c] - f * mat[rpos][c];
    }
    ++rank;
    ++rpos;
  }
  return (long)ncols - rank;
}

}  // namespace fibra
