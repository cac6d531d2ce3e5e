#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fibra/arrangement.hpp"

namespace fibra {

// Schema "fibra-construction/1": one verifiable double-cover construction
// (kind "standard"), a curve-fibered sibling (kind "variant"), or a
// literature-sourced surface datum (kind "literature").
struct ConstructionFile {
  std::string id;
  std::string source_example;
  std::string kind;  // standard | variant | literature
  std::string title;

  // standard
  RatPoly min_poly;
  BaseSurface base = BaseSurface::P1xP1;
  struct CurveSpec {
    std::string name;
    std::string expr;  // empty for fibers
    bool is_fiber = false;
    int fiber_axis = 0;
    std::string fiber_at;  // FE expression or "inf"
    int da = 0, db = 0;
  };
  std::vector<CurveSpec> curves;
  struct PencilMemberSpec {
    std::string name;
    int da = 0, db = 0;
    struct Term {
      std::string coeff;  // FE expression
      std::vector<std::string> factors;
    };
    std::vector<Term> terms;
  };
  std::optional<PencilMemberSpec> pencil_member;
  std::vector<std::string> branch;
  std::vector<long> delta_class;
  struct PointSpec {
    std::string name;
    // P1xP1: x/y ("inf" allowed); P2: affine x/y or projective X/Y/Z
    std::map<std::string, std::string> coords;
    int mult = 0;
    std::string type;
  };
  std::vector<PointSpec> points;
  struct ClassSpec {
    std::vector<long> base;
    std::map<std::string, long> exc;  // by point name
  };
  ClassSpec fibration;  // the genus-2 fiber class H upstairs
  ClassSpec pencil;     // the moving pencil defining C-hat
  struct ContractionSpec {
    std::string kind;  // branch_components | exceptional
    std::vector<std::string> names;
  };
  ContractionSpec contractions;
  std::map<std::string, long> expected;

  // variant
  std::string sibling;
  long nu = 3;

  // literature
  long lit_K2 = 0, lit_chi = 1, lit_pg = 0, lit_q = 0;
  long lit_H_self = 0, lit_KH = 0, lit_g_H = 0;
  long lit_g_C_hat = 0, lit_d = 0;
  std::string provenance;

  std::vector<std::string> assertions;
};

ConstructionFile parse_construction(const nlohmann::json& j);
ConstructionFile load_construction(const std::string& path);

// Field-element literal: the expression grammar restricted to t and rationals.
FE fe_parse(const std::string& text, const FieldPtr& K);

// Resolve the corpus directory: FIBRA_CORPUS_DIR, ./corpus, ../corpus, then
// the build-time default.
std::string corpus_dir();
// The ten construction ids in canonical corpus order.
const std::vector<std::string>& corpus_order();

}  // namespace fibra
