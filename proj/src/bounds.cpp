#include "fibra/bounds.hpp"

#include <algorithm>

namespace fibra {
namespace bounds {

Rat volume_bound_rhs(long p, const Rat& beta, const Rat& xi) {
  if (p < 1 || beta <= 0) fail(ErrCode::InvalidInput, "need p >= 1 and beta > 0");
  return Rat(p) * beta * xi;
}

bool volume_bound_holds(const Rat& K3, long p, const Rat& beta, const Rat& xi) {
  return K3 >= volume_bound_rhs(p, beta, xi);
}

Rat xi_lower_bound(long g_C, long p, const Rat& beta) {
  if (g_C < 2 || p < 1 || beta <= 0)
    fail(ErrCode::InvalidInput, "need g >= 2, p >= 1, beta > 0");
  Rat den = Rat(1) + Rat(1, p) + Rat(1) / beta;
  return Rat(2 * g_C - 2) / den;
}

CurveVolumeBound curve_volume_bound(long g_C, long pg_X) {
  if (pg_X < 3 || g_C < 2) fail(ErrCode::InvalidInput, "need pg >= 3 and g >= 2");
  CurveVolumeBound out;
  Rat inner = Rat(2 * g_C - 2) / (Rat(2) + Rat(1, pg_X - 2));
  Rat ceil = rat_ceil(inner);
  out.ceiling_form = mpz_get_si(ceil.get_num().get_mpz_t()) * (pg_X - 2);
  out.bound = out.ceiling_form;
  if (pg_X >= 84) {
    out.refined_applies = true;
    out.refined_form = (g_C - 1) * (pg_X - 2);
    out.bound = std::max(out.ceiling_form, out.refined_form);
  }
  return out;
}

long max_curve_genus(long pg_X) {
  if (pg_X < 84) fail(ErrCode::RegimeTooSmall, "the refined volume bound needs pg >= 84");
  // largest g with (g-1)(pg-2) <= 90 pg
  Rat bound = Rat(90 * pg_X, pg_X - 2);
  Rat fl = rat_floor(bound);
  long g = mpz_get_si(fl.get_num().get_mpz_t()) + 1;
  // absolute caps from the low cases never bind here (g >= 91 > 37)
  return std::max(g, 37L);
}

Rat surface_volume_lower_bound(long k, long pg_X, int b) {
  if (k < 1) fail(ErrCode::InvalidInput, "need K_{F0}^2 >= 1");
  if (b != 0 && b != 1) fail(ErrCode::InvalidInput, "b must be 0 or 1");
  Rat t(20 * k + 1);
  Rat coeff = Rat(k) + Rat(1) / (4 * t);
  if (b == 1) return coeff * Rat(pg_X);
  if (pg_X < 56) fail(ErrCode::RegimeTooSmall, "the b = 0 case needs pg >= 56");
  return coeff * Rat(pg_X - 1) - Rat(4 * k) / (2 * t);
}

ParityThreshold parity_threshold_pg() {
  ParityThreshold out;
  // largest pg with 2(pg-1)^2 <= 108 pg
  long last = 1;
  for (long p = 1; p <= 2000; ++p) {
    if (2 * (p - 1) * (p - 1) <= 108 * p) last = p;
  }
  out.last_pg = last;
  out.holds_from = last + 1;
  out.statement = "K.N^2 = 0 whenever pg >= " + std::to_string(out.holds_from);
  return out;
}

namespace {

bool k2_feasible(long k, long pg, int b, QF q) {
  Rat t(20 * k + 1);
  if (b == 1) return Rat(k) + Rat(1) / (4 * t) <= 72;
  Rat rhs = Rat(72) - Rat(1) / (4 * t);
  if (q == QF::Positive)
    rhs += (Rat(36 * k) + Rat(2 * k) / t) / Rat(pg - 1);
  else
    rhs += (Rat(2 * k) / t) / Rat(pg - 1);
  return Rat(k) <= rhs;
}

long max_feasible_k2(long pg, int b, QF q) {
  long best = 0;
  for (long k = 1; k <= 200; ++k)
    if (k2_feasible(k, pg, b, q)) best = k;
  return best;
}

}  // namespace

MaxK2Result max_fiber_K2(long pg_X, int b, QF q_F) {
  if (b != 0 && b != 1) fail(ErrCode::InvalidInput, "b must be 0 or 1");
  if (b == 0 && pg_X < 56) fail(ErrCode::RegimeTooSmall, "the b = 0 case needs pg >= 56");
  MaxK2Result out;
  out.max_K2 = max_feasible_k2(pg_X, b, q_F);
  bool q_positive = (q_F == QF::Positive) && b == 0;
  out.max_pg_F = q_positive ? out.max_K2 / 2 : (out.max_K2 + 4) / 2;
  out.strictness_note = true;
  if (b == 0) {
    // exact bisection: smallest pg where 72 stops being feasible
    long lo = 56, hi = 56;
    while (k2_feasible(72, hi, b, q_F)) hi *= 2;
    while (lo + 1 < hi) {
      long mid = lo + (hi - lo) / 2;
      if (k2_feasible(72, mid, b, q_F)) lo = mid;
      else hi = mid;
    }
    out.threshold_K2_below_72 = k2_feasible(72, lo, b, q_F) ? hi : lo;
  }
  return out;
}

SurfaceIneq surface_inequalities(long pg_F, long q_F) {
  if (pg_F < 0) fail(ErrCode::InvalidInput, "pg must be nonnegative");
  SurfaceIneq out;
  out.noether_min_K2 = 2 * pg_F - 4;
  if (q_F > 0) {
    out.has_debarre = true;
    out.debarre_min_K2 = 2 * pg_F;
  }
  return out;
}

bool miyaoka_yau_check(const Rat& K3, const Rat& chi_omega) {
  return K3 <= 72 * chi_omega;
}

}  // namespace bounds
}  // namespace fibra
