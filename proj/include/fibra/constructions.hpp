#pragma once

#include <string>

#include "fibra/errors.hpp"

namespace fibra {

// A verified minimal surface of general type with pg = 0, a genus-2-type
// pencil datum H and the moving pencil C-hat of |K+H|.
struct SurfacePair {
  long K2_S = 0;
  long chi_S = 1;
  long pg_S = 0;
  long q_S = 0;
  long H_self = 0;      // H^2
  long KH = 0;          // K_S . H
  long g_H = 0;         // arithmetic genus of H
  long g_C_hat = 0;     // genus of the moving pencil member
  long d = 0;           // C-hat . H
  std::string provenance;
};

struct GenusTwoPencilCheck {
  long h0_K_plus_H = 0;  // (K+H).H/2 + chi
  long d = 0;            // = 2, the pencil degree
  bool g_C_hat_at_least_3 = false;
};

// Verifies h0(K_S+H) = (K_S+H).H/2 + chi(O_S) = 2 for a genus-2 fiber datum
// and records d = 2; flags g(C-hat) >= 3 when K^2 >= 2.
GenusTwoPencilCheck check_genus_two_pencil(const SurfacePair& pair);

struct ThreefoldReport {
  enum class Kind { Standard, Variant } kind = Kind::Standard;
  long nu = 0;           // Variant only
  long pg_F = 0;         // Standard: fiber surface geometric genus
  long g_F = 0;          // Variant: fiber curve genus
  long pg_X = 0;
  long K3_X = 0;         // Standard only
  long chi_omega_X = 0;  // Standard only
};

// pg_F = 3 g(C-hat) + d - 1 (d > 0) or 3 g(C-hat) (d = 0); pg_X = 2;
// K3 = 12 (K_S+H)^2; chi(omega_X) = -(chi(O_Y) + chi(O_S(-H)) chi(O_C0(-theta))).
ThreefoldReport standard_construction(const SurfacePair& pair);

// g_F = 2 g(C-hat) + d - 1; pg_X = 2(nu - 1). NuTooSmall for nu < 3.
ThreefoldReport variant_construction(const SurfacePair& pair, long nu);

}  // namespace fibra
