#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fibra/forms.hpp"

namespace fibra {

class Lattice;
using LatPtr = std::shared_ptr<const Lattice>;

struct DivClass {
  LatPtr lat;
  std::vector<long> v;  // base coefficients then one per exceptional slot

  DivClass operator+(const DivClass& o) const;
  DivClass operator-(const DivClass& o) const;
  DivClass operator*(long k) const;
  bool operator==(const DivClass& o) const;
  long dot(const DivClass& o) const;      // intersection form
  long self() const { return dot(*this); }
  std::string str() const;
};

// Picard lattice of P^2 or P^1xP^1 with an ordered list of exceptional slots
// in the orthogonal total-transform basis (e_i . e_j = -delta_ij, e_i . base = 0).
class Lattice : public std::enable_shared_from_this<Lattice> {
 public:
  struct Slot {
    std::string label;
    SurfPoint point;
    int level = 0;       // 0 = point of the base surface
    int parent = -1;     // slot index of the parent for infinitely near slots
  };

  static LatPtr make(BaseSurface base, FieldPtr K);
  // Appends a (-1)-slot; DuplicatePoint if the same point or label exists.
  LatPtr blow_up(const SurfPoint& p, const std::string& label, int parent_slot = -1) const;

  BaseSurface base() const { return base_; }
  const FieldPtr& field() const { return K_; }
  int base_rank() const { return base_ == BaseSurface::P2 ? 1 : 2; }
  int rank() const { return base_rank() + (int)slots_.size(); }
  const std::vector<Slot>& slots() const { return slots_; }
  int find_slot(const std::string& label) const;  // -1 if absent

  DivClass zero() const;
  DivClass base_class(long a, long b = 0) const;  // P2: a*H; P1xP1: (a,b)
  DivClass exc(int slot) const;
  DivClass canonical() const;
  long chi_structure_sheaf() const { return 1; }

  // Embeds a class from an ancestor lattice (total-transform convention).
  DivClass embed(const DivClass& c) const;
  bool extends(const Lattice& ancestor) const;

  long intersect(const DivClass& a, const DivClass& b) const;
  long adjunction_genus(const DivClass& d) const;  // 1/2 D(D+K) + 1
  long riemann_roch_chi(const DivClass& d) const;  // chi(O) + 1/2 D(D-K)

  // Signature of the intersection form by rational congruence diagonalization:
  // returns (positives, negatives).
  std::pair<int, int> signature() const;

 private:
  Lattice(BaseSurface base, FieldPtr K) : base_(base), K_(std::move(K)) {}
  BaseSurface base_;
  FieldPtr K_;
  std::vector<Slot> slots_;
};

// Interpolation h^0: dimension of forms of the given (bi)degree satisfying
// point conditions. Conditions sit on clusters (root point, optional depth-1
// child with a tangent direction). Throws UnsupportedDepth for deeper chains.
struct PointCondition {
  SurfPoint point;  // level-0 root
  int mult = 1;     // multiplicity at the root (m1 >= 0)
  bool has_child = false;
  FE d0, d1;           // tangent direction of the child
  int child_mult = 0;  // m2 >= 0
};
long h0_interpolation(BaseSurface base, const FieldPtr& K, int da, int db,
                      const std::vector<PointCondition>& conds);

}  // namespace fibra
