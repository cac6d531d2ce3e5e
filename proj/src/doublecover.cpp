#include "fibra/doublecover.hpp"

#include <algorithm>
#include <sstream>

namespace fibra {

namespace {

constexpr int kMaxDepth = 2;  // deepest allowed infinitely-near blow-up level

struct RootExtraction {
  std::vector<std::pair<FE, int>> roots;  // (root, multiplicity in the squarefree sense)
  bool complete = true;
  std::string residual;
};

// K-roots of a univariate polynomial with a completeness certificate: each
// squarefree factor of degree <= 2 is decided; a surviving factor makes the
// extraction incomplete.
RootExtraction extract_roots(const UPoly& p) {
  RootExtraction out;
  if (p.is_zero() || p.deg() < 1) return out;
  for (auto& [f, mult] : up_squarefree_decomposition(p)) {
    if (f.deg() == 1) {
      out.roots.push_back({-(f.c[0] / f.c[1]), mult});
      continue;
    }
    if (f.deg() == 2) {
      FE a = f.c[2], b = f.c[1], c = f.c[0];
      FE disc = b * b - fe_scale(a * c, Rat(4));
      std::optional<FE> root;
      try {
        root = sqrt_in_field(disc);
      } catch (const Error& e) {
        if (e.code() != ErrCode::Undecidable) throw;
        out.complete = false;
        out.residual = f.str("w");
        continue;
      }
      if (root) {
        out.roots.push_back({(-b + *root) / fe_scale(a, Rat(2)), mult});
        out.roots.push_back({(-b - *root) / fe_scale(a, Rat(2)), mult});
      } else {
        out.complete = false;
        out.residual = f.str("w");
      }
      continue;
    }
    out.complete = false;
    out.residual = f.str("w");
  }
  return out;
}

struct TrackedExc {
  int slot = -1;
  bool in_branch = false;
  BiPoly eq;  // local equation in the current chart; constant if invisible
};

class Engine {
 public:
  Engine(const Arrangement& arr, const DivClass& delta0,
         const std::vector<std::pair<std::string, SurfPoint>>& points)
      : arr_(arr), K_(arr.K), points_(points) {
    lat_ = Lattice::make(arr.base, K_);
    DivClass branch0 = lat_->base_class(arr.class_a(), arr.class_b());
    if (!(delta0 * 2 == branch0))
      fail(ErrCode::OddBranchClass,
           "branch class " + branch0.str() + " is not twice delta " + delta0.str());
    delta0_ = delta0;
  }

  CoverData run() {
    Form red = arr_.reduced_form();
    for (auto& [name, p] : points_) {
      BiPoly f = red.local_at(p);
      if (f.min_total_deg() < 2)
        fail(ErrCode::InvalidInput, "listed point " + p.str() + " is not singular");
      std::vector<TrackedExc> excs;
      resolve(f, excs, p, 0, name, -1);
    }
    return finish();
  }

 private:
  const Arrangement& arr_;
  FieldPtr K_;
  LatPtr lat_;
  DivClass delta0_;
  std::vector<std::pair<std::string, SurfPoint>> points_;
  std::vector<ResolutionStep> log_;
  std::vector<std::pair<int, int>> subs_;  // (slot, k)
  struct ExcClass {
    std::string label;
    bool in_branch;
    std::vector<std::pair<int, long>> coeffs;  // slot -> coefficient
  };
  std::vector<ExcClass> exc_classes_;
  bool smooth_ = true;
  std::string diag_;

  void resolve(const BiPoly& f, std::vector<TrackedExc> excs, const SurfPoint& center,
               int level, const std::string& label, int parent_slot) {
    if (level > kMaxDepth)
      fail(ErrCode::UnresolvableAtDepth,
           "resolution needs infinitely-near depth " + std::to_string(level) + " at " + label);
    FE z = FE::zero(K_);
    int mf = f.eval(z, z).is_zero() ? f.min_total_deg() : 0;
    int m = mf;
    for (auto& e : excs)
      if (e.in_branch && !e.eq.is_constant() && e.eq.eval(z, z).is_zero())
        m += e.eq.min_total_deg();
    if (m < 2) fail(ErrCode::InvalidInput, "resolution center is not singular: " + label);

    lat_ = lat_->blow_up(center, label, parent_slot);
    int slot = (int)lat_->slots().size() - 1;
    int k = m / 2;
    subs_.push_back({slot, k});
    log_.push_back({label, level, m, k});

    // class bookkeeping for previously created exceptionals through the center
    for (auto& e : excs) {
      if (e.eq.is_constant()) continue;
      if (!e.eq.eval(z, z).is_zero()) continue;
      exc_classes_[e.slot].coeffs.push_back({slot, -(long)e.eq.min_total_deg()});
    }
    bool new_in_branch = (m % 2) == 1;
    exc_classes_.push_back({label, new_in_branch, {{slot, 1}}});
    int exc_index = (int)exc_classes_.size() - 1;

    // process both charts
    for (int chart = 0; chart < 2; ++chart) {
      BiPoly s = BiPoly::var_x(K_), w = BiPoly::var_y(K_);
      auto down = [&](const BiPoly& g) {
        return chart == 0 ? g.subst(s, s * w) : g.subst(s * w, s);
      };
      BiPoly fA = mf > 0 ? down(f).divexact_xpow(mf) : down(f);
      std::vector<TrackedExc> next;
      for (auto& e : excs) {
        TrackedExc t = e;
        if (!t.eq.is_constant()) {
          int ord = t.eq.eval(z, z).is_zero() ? t.eq.min_total_deg() : 0;
          t.eq = ord > 0 ? down(t.eq).divexact_xpow(ord) : down(t.eq);
        }
        next.push_back(std::move(t));
      }
      TrackedExc mine;
      mine.slot = exc_index;
      mine.in_branch = new_in_branch;
      mine.eq = BiPoly::var_x(K_);  // E = {s = 0} in both charts
      next.push_back(mine);

      // total visible branch polynomial
      BiPoly T = fA;
      for (auto& e : next)
        if (e.in_branch && !e.eq.is_constant()) T = T * e.eq;

      if (chart == 0) {
        // all finite directions
        UPoly probe;
        if (new_in_branch) {
          BiPoly Tp = T.divexact_xpow(1);
          probe = Tp.eval_x(z);  // roots = singular points of branch on E
        } else {
          UPoly a = T.eval_x(z);
          UPoly b = T.derivative_x().eval_x(z);
          UPoly c = T.derivative_y().eval_x(z);
          if (a.is_zero())
            fail(ErrCode::InvalidInput, "exceptional contained in branch unexpectedly");
          UPoly g = a;
          if (!b.is_zero()) g = up_gcd(g, b);
          if (!c.is_zero()) g = up_gcd(g, c);
          probe = g.deg() >= 1 ? g : UPoly(K_);
        }
        if (!probe.is_zero() && probe.deg() >= 1) {
          RootExtraction ex = extract_roots(probe);
          if (!ex.complete)
            fail(ErrCode::UnresolvableAtDepth,
                 "singular direction not expressible over the working field at " + label +
                     ": " + ex.residual);
          for (auto& [w0, mult] : ex.roots) {
            (void)mult;
            if (!new_in_branch) {
              // verified singular by the gcd; recurse
            } else {
              // root of T'(0,w): branch singular there (E + strict)
            }
            BiPoly f2 = fA.translate(z, w0);
            std::vector<TrackedExc> excs2;
            for (auto& e : next) {
              TrackedExc t = e;
              if (!t.eq.is_constant()) t.eq = t.eq.translate(z, w0);
              excs2.push_back(std::move(t));
            }
            SurfPoint child = SurfPoint::infinitely_near(center, FE::one(K_), w0);
            std::string lbl = label + "'";
            while (lat_->find_slot(lbl) >= 0) lbl += "'";
            resolve(f2, excs2, child, level + 1, lbl, slot);
          }
        }
      } else {
        // chart B: only the direction (0:1) at the origin is new
        int mB = 0;
        if (!T.is_zero() && T.eval(z, z).is_zero()) mB = T.min_total_deg();
        if (mB >= 2) {
          SurfPoint child = SurfPoint::infinitely_near(center, FE::zero(K_), FE::one(K_));
          std::string lbl = label + "'";
          while (lat_->find_slot(lbl) >= 0) lbl += "'";
          resolve(fA, next, child, level + 1, lbl, slot);
        }
      }
    }
  }

  CoverData finish() {
    CoverData out;
    out.lat = lat_;
    out.delta = lat_->embed(delta0_);
    out.branch = out.delta * 2;
    for (auto& [slot, k] : subs_) {
      out.delta.v[lat_->base_rank() + slot] -= k;
      out.branch.v[lat_->base_rank() + slot] -= 2 * k;
    }
    if (!(out.delta * 2 == out.branch))
      fail(ErrCode::OddBranchClass, "internal: branch drifted away from 2*delta");
    out.log = log_;
    out.branch_smooth = smooth_;
    out.diag = diag_;
    for (auto& ec : exc_classes_) {
      if (!ec.in_branch) continue;
      DivClass c = lat_->zero();
      for (auto& [slot, coeff] : ec.coeffs) c.v[lat_->base_rank() + slot] += coeff;
      out.branch_exceptionals.push_back({ec.label, c});
    }
    return out;
  }
};

}  // namespace

CoverData even_resolution(const Arrangement& reduced_branch, const DivClass& delta0,
                          const std::vector<std::pair<std::string, SurfPoint>>& points) {
  for (auto& comp : reduced_branch.components)
    if (comp.weight != 1)
      fail(ErrCode::InvalidInput, "branch divisor must be reduced (weight 1 components)");
  Engine eng(reduced_branch, delta0, points);
  return eng.run();
}

CoverInvariants smooth_cover_invariants(long chi_ambient, const DivClass& K_ambient,
                                        const DivClass& delta, long pg_ambient,
                                        long h0_K_plus_delta, bool branch_smooth) {
  if (!branch_smooth)
    fail(ErrCode::BranchNotSmooth, "cover invariants require a smooth branch divisor");
  long dd = delta.dot(delta);
  long dk = delta.dot(K_ambient);
  if ((dd + dk) % 2 != 0) fail(ErrCode::InvalidInput, "non-integral chi");
  CoverInvariants inv;
  inv.chi = 2 * chi_ambient + (dd + dk) / 2;
  DivClass kd = K_ambient + delta;
  inv.K2 = 2 * kd.dot(kd);
  inv.pg = pg_ambient + h0_K_plus_delta;
  inv.q = 1 + inv.pg - inv.chi;
  inv.minus_one_contractions = 0;
  inv.K2_minimal = inv.K2;
  return inv;
}

long branch_component_halving(long c2) {
  if (c2 % 2 != 0)
    fail(ErrCode::OddSelfIntersection,
         "branch component has odd self-intersection " + std::to_string(c2));
  return c2 / 2;
}

CoverInvariants contract_minus_one(const CoverInvariants& inv, long n) {
  CoverInvariants out = inv;
  out.minus_one_contractions = n;
  out.K2_minimal = inv.K2 + n;
  return out;
}

long hurwitz_double_cover_genus(long g_base, long branch_points) {
  if (branch_points < 0 || branch_points % 2 != 0)
    fail(ErrCode::OddBranchCount,
         "a double cover needs an even number of simple branch points, got " +
             std::to_string(branch_points));
  // 2g - 2 = 2(2g_base - 2) + branch_points
  return 2 * g_base - 1 + branch_points / 2;
}

}  // namespace fibra
