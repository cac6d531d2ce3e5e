#pragma once

#include <string>

#include "fibra/field.hpp"

namespace fibra {
namespace bounds {

// Volume inequality: K^3 >= p * beta * xi.
Rat volume_bound_rhs(long p, const Rat& beta, const Rat& xi);
bool volume_bound_holds(const Rat& K3, long p, const Rat& beta, const Rat& xi);

// Lower bound for xi = pi*(K).C: (2g-2) / (1 + 1/p + 1/beta).
Rat xi_lower_bound(long g_C, long p, const Rat& beta);

// Curve-fibered volume bound: ceil((2g-2)/(2 + 1/(pg-2))) * (pg-2), refined to
// (g-1)(pg-2) for pg >= 84 (the larger of the two is returned there).
struct CurveVolumeBound {
  long ceiling_form = 0;
  long refined_form = 0;  // only meaningful when refined_applies
  bool refined_applies = false;
  long bound = 0;  // max of the applicable forms
};
CurveVolumeBound curve_volume_bound(long g_C, long pg_X);

// Largest fiber-curve genus compatible with (g-1)(pg-2) <= 90 pg, for
// pg >= 84 (RegimeTooSmall below). Absolute case caps (28/37/36) never bind.
long max_curve_genus(long pg_X);

// Surface-fibered lower bound on K^3 (exact rational):
//   b=1: (k + 1/(4(20k+1))) pg
//   b=0: (k + 1/(4(20k+1)))(pg-1) - 4k/(2(20k+1)),  requires pg >= 56.
Rat surface_volume_lower_bound(long K_F0_sq, long pg_X, int b);

// Largest pg with 2(pg-1)^2 <= 108 pg; K.N^2 = 0 holds from the next value on.
struct ParityThreshold {
  long last_pg = 0;       // 55
  long holds_from = 0;    // 56
  std::string statement;
};
ParityThreshold parity_threshold_pg();

enum class QF { Zero, Positive };

// Largest K_{F0}^2 passing the exact feasibility test K2 <= RHS(K2) over
// integers in [1, 200], plus the fiber pg bound from the Noether (q=0 / b=1)
// or the irregular-surface inequality (q>0).
struct MaxK2Result {
  long max_K2 = 0;
  long max_pg_F = 0;
  // smallest pg at which max_K2 first drops below 72 (b = 0 cases; exact
  // bisection value reported alongside the requested evaluation)
  long threshold_K2_below_72 = 0;
  bool strictness_note = false;  // the published chain uses "< 72" at the boundary
};
MaxK2Result max_fiber_K2(long pg_X, int b, QF q_F);

// Noether: K^2 >= 2 pg - 4; for q > 0 additionally K^2 >= 2 pg.
struct SurfaceIneq {
  long noether_min_K2 = 0;
  bool has_debarre = false;
  long debarre_min_K2 = 0;
};
SurfaceIneq surface_inequalities(long pg_F, long q_F);

bool miyaoka_yau_check(const Rat& K3, const Rat& chi_omega);

}  // namespace bounds
}  // namespace fibra
