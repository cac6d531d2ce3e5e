#include "fibra/constructions.hpp"

namespace fibra {

GenusTwoPencilCheck check_genus_two_pencil(const SurfacePair& pair) {
  long gH = pair.g_H;
  long two_gH = pair.H_self + pair.KH + 2;  // 2 p_a(H) via adjunction
  if (two_gH % 2 != 0 || two_gH / 2 != gH)
    fail(ErrCode::InvalidInput, "inconsistent H data");
  if (gH != 2)
    fail(ErrCode::NotGenusTwoFiber, "pencil datum has genus " + std::to_string(gH));
  long twice = (pair.K2_S + 2 * pair.KH + pair.H_self) + pair.H_self + pair.KH;
  // (K+H).H = K.H + H^2
  long KplusH_dot_H = pair.KH + pair.H_self;
  (void)twice;
  if (KplusH_dot_H % 2 != 0) fail(ErrCode::InvalidInput, "odd (K+H).H");
  GenusTwoPencilCheck out;
  out.h0_K_plus_H = KplusH_dot_H / 2 + pair.chi_S;
  if (out.h0_K_plus_H != 2)
    fail(ErrCode::PencilDimensionMismatch,
         "h0(K+H) formula gives " + std::to_string(out.h0_K_plus_H) + ", expected 2");
  out.d = 2;
  out.g_C_hat_at_least_3 = pair.K2_S >= 2;
  return out;
}

ThreefoldReport standard_construction(const SurfacePair& pair) {
  if (pair.pg_S != 0)
    fail(ErrCode::InvalidInput, "standard construction needs pg(S) = 0");
  if (pair.g_C_hat <= 0) fail(ErrCode::MissingPencil, "missing pencil genus");
  ThreefoldReport r;
  r.kind = ThreefoldReport::Kind::Standard;
  r.pg_F = pair.d > 0 ? 3 * pair.g_C_hat + pair.d - 1 : 3 * pair.g_C_hat;
  // h0(K_S+H) = 2 and h0(K_C0 + theta) = 1 for the nontrivial 2-torsion twist
  r.pg_X = 2 * 1;
  long KplusH_sq = pair.K2_S + 2 * pair.KH + pair.H_self;
  r.K3_X = 12 * KplusH_sq;
  // chi(O_X) = chi(O_Y) + chi(O_S(-H)) * chi(O_C0(-theta));
  // chi(O_Y) = chi(O_S) * (1 - 2), chi(O_S(-H)) = chi + (H^2 + K.H)/2,
  // chi(O_C0(-theta)) = 0 + 1 - 2 = -1.
  long chi_S_minus_H = pair.chi_S + (pair.H_self + pair.KH) / 2;
  long chi_OX = -pair.chi_S + chi_S_minus_H * (-1);
  r.chi_omega_X = -chi_OX;
  return r;
}

ThreefoldReport variant_construction(const SurfacePair& pair, long nu) {
  if (nu < 3) fail(ErrCode::NuTooSmall, "variant needs genus nu >= 3");
  if (pair.g_C_hat <= 0) fail(ErrCode::MissingPencil, "missing pencil genus");
  ThreefoldReport r;
  r.kind = ThreefoldReport::Kind::Variant;
  r.nu = nu;
  r.g_F = 2 * pair.g_C_hat + pair.d - 1;
  // h0(K_S+H) * h0(K_{C_nu} + theta) with a nontrivial degree-0 twist:
  // h0 = (2nu - 2) + 1 - nu = nu - 1.
  r.pg_X = 2 * (nu - 1);
  return r;
}

}  // namespace fibra
