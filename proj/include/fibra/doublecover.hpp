#pragma once

#include <string>
#include <vector>

#include "fibra/arrangement.hpp"
#include "fibra/piclattice.hpp"

namespace fibra {

struct ResolutionStep {
  std::string label;
  int level = 0;
  int mult = 0;        // branch multiplicity at the center
  int subtracted = 0;  // floor(mult/2): coefficient removed from delta
};

// Double-cover data (ambient lattice, half-class delta, branch class 2*delta),
// evolving through the even resolution.
struct CoverData {
  LatPtr lat;
  DivClass delta;
  DivClass branch;
  std::vector<ResolutionStep> log;
  bool branch_smooth = false;
  std::string diag;
  // Strict classes of exceptional curves that are branch components.
  std::vector<std::pair<std::string, DivClass>> branch_exceptionals;
};

// Canonical even resolution: repeatedly blow up singular points of the
// current branch divisor, subtracting 2*floor(m/2) from the branch and
// floor(m/2) from delta, until the branch is smooth. Point towers are
// processed in the order given (the pipeline passes canonical point order).
// Throws UnresolvableAtDepth beyond infinitely-near depth 2, OddBranchClass
// on 2*delta != branch.
CoverData even_resolution(const Arrangement& reduced_branch, const DivClass& delta0,
                          const std::vector<std::pair<std::string, SurfPoint>>& points);

struct CoverInvariants {
  long chi = 0;
  long K2 = 0;
  long pg = 0;
  long q = 0;
  long minus_one_contractions = 0;
  long K2_minimal = 0;
};

// Invariants of the smooth double cover: chi = 2*chi_amb + delta(delta+K)/2,
// K^2 = 2(K+delta)^2, pg = pg_ambient + h0(K+delta), q = 1 + pg - chi.
CoverInvariants smooth_cover_invariants(long chi_ambient, const DivClass& K_ambient,
                                        const DivClass& delta, long pg_ambient,
                                        long h0_K_plus_delta, bool branch_smooth);

// Self-intersection of the reduced preimage of a smooth branch component:
// requires an even self-intersection. Returns c2/2.
long branch_component_halving(long component_self_intersection);

CoverInvariants contract_minus_one(const CoverInvariants& inv, long n);

// Genus of a double cover of a genus-g curve with the given number of simple
// branch points (OddBranchCount if the count is odd).
long hurwitz_double_cover_genus(long g_base, long branch_points);

}  // namespace fibra
