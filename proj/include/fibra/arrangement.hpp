#pragma once

#include <map>
#include <string>
#include <vector>

#include "fibra/forms.hpp"

namespace fibra {

// A weighted curve arrangement R = sum n_i C_i on a base surface.
struct Arrangement {
  struct Component {
    std::string name;
    Form curve;
    int weight = 1;
  };
  BaseSurface base;
  FieldPtr K;
  std::vector<Component> components;

  long class_a() const;  // total (a, b) / degree of R
  long class_b() const;
  const Component& find(const std::string& name) const;
  // Product of the component polynomials, each once (the reduced divisor).
  Form reduced_form() const;
  // Pairwise coprimality of components (no shared factor, incl. infinity lines).
  void check_pairwise_coprime() const;  // throws CommonComponent
};

int arrangement_mult_at(const Arrangement& arr, const SurfPoint& p);

// Local intersection multiplicity at a point; shear slopes tried from the
// fixed sequence 0, 1, 2, ... until valid. CommonComponent if gcd nontrivial.
int intersection_mult(const Form& c1, const Form& c2, const SurfPoint& p);

// Bezout completeness certificate for a coprime pair.
struct CompletenessCert {
  long bezout_total = 0;
  std::vector<std::pair<SurfPoint, int>> local_mults;
  bool complete = false;
};
CompletenessCert certify_complete(const Form& c1, const Form& c2,
                                  const std::vector<SurfPoint>& claimed);

enum class SingType {
  Smooth,
  OrdinaryDouble,
  OrdinaryTriple,
  ThreeToThree,
  OrdinaryQuadruple,
  Other
};
std::string sing_type_name(SingType t);

struct SingularPointRecord {
  SurfPoint point;
  int total_mult = 0;
  std::map<std::string, int> component_mults;
  SingType type = SingType::Smooth;
  std::string type_detail;  // for Other: a description
  int tangent_directions = 0;
  std::vector<ConeFactor> cone_factors;  // of the reduced local divisor
};

// Classifies the reduced arrangement at the point. Throws UnsplitTangentCone
// when direction counting cannot be certified over the working field.
SingularPointRecord classify_singularity(const Arrangement& arr, const SurfPoint& p);

// True iff the strict transform of the reduced total divisor is smooth along
// the exceptional line after one blow-up at each listed point.
bool strict_transform_smooth_after_blowup(const Arrangement& arr,
                                          const std::vector<SurfPoint>& points,
                                          std::string* diag = nullptr);

// Certifies that `claimed` is the complete singular locus of the reduced
// arrangement: every pairwise intersection is enumerated (Bezout-complete)
// and every component's own singular locus lies in the claimed set.
struct LocusCert {
  bool ok = false;
  std::string diag;
  // names of component pairs and their certified totals
  std::vector<std::string> notes;
};
LocusCert singular_locus_certify(const Arrangement& arr,
                                 const std::vector<SurfPoint>& claimed);

}  // namespace fibra
