#pragma once

#include <string>
#include <vector>

#include "eginv/algebra.hpp"

namespace eginv {

// Inclusive coefficient range; empty when lo > hi. Matrix-instance components
// always use {0, 0} (their finite bases need no truncation).
struct Window {
  int lo = 0;
  int hi = 0;
  bool empty() const { return lo > hi; }
  int size() const { return empty() ? 0 : hi - lo + 1; }
  bool contains(const Window& o) const { return o.empty() || (lo <= o.lo && o.hi <= hi); }
  bool operator==(const Window&) const = default;
};

// The four signed direct sums the compressions act between:
//   X+ = A+ (+) B+,  X- = A-0 (+) B-,  Y+ = C+ (+) D+0,  Y- = C- (+) D-.
enum class SpaceSign { XPlus, XMinus, YPlus, YMinus };

struct SpaceComponent {
  PartTag part;
  int rows = 0;
  int cols = 0;
  Window window;  // coefficient range (sequence instance)
  bool operator==(const SpaceComponent&) const = default;
};

struct Space {
  AlgebraInstance inst;
  std::vector<SpaceComponent> comps;

  int dim() const;
  bool operator==(const Space& o) const { return inst == o.inst && comps == o.comps; }
  std::string describe() const;
};

// Coefficient range of a part clipped to |j| <= radius (sequence instance);
// {0, 0} for the matrix instance.
Window part_range(const AlgebraInstance& inst, PartTag part, int radius);

// Intersection of an arbitrary range with a part's index set.
Window clip_to_part(const AlgebraInstance& inst, PartTag part, Window range);

Space make_space(const AlgebraInstance& inst, SpaceSign sign, int radius);
Space single_part_space(const AlgebraInstance& inst, PartTag part, int radius);
Space concat(const Space& a, const Space& b);  // direct sum, e.g. X+ (+) Y-

// An element of a direct-sum space: one algebra element per component.
struct Stacked {
  std::vector<MatSeq> comps;
};

Stacked zero_stacked(const Space& space);
int component_dim(const Space& space, int ci);
int component_offset(const Space& space, int ci);

// Basis enumeration: components in order; within a sequence component,
// coefficient index ascending, entries row-major; within a matrix component,
// the canonical elementary-matrix order of mat::basis.
MatSeq basis_at(const Space& space, int ci, int local);

// Vectorize one component element into the column starting at the component's
// offset. The element must lie inside the component (part and window); spill
// is reported as an error.
void vec_component(const Space& space, int ci, const MatSeq& x, CVec& out);

CVec vec(const Space& space, const Stacked& x);
Stacked unvec(const Space& space, const CVec& v);

// Membership defect of x relative to the space (part + window restriction).
double space_residual(const Space& space, int ci, const MatSeq& x);

}  // namespace eginv
