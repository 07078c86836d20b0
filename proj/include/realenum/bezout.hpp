#pragma once

#include <optional>
#include <vector>

#include "realenum/surface.hpp"

namespace realenum {

// Shared constraints two hypothetical distinct curves in the same class would
// both satisfy, with the lower bound each kind forces on their local
// intersection multiplicity.
enum class ConstraintKind {
  SimplePoint,          // both pass through the point: multiplicity >= 1
  ShadowedNode,         // both acquire the nodes of a nearby curve: >= 2
  SharedTangency,       // common tangent direction at a point: >= 2
  SharedPrescribedNode  // both have a node at the same point: >= 4
};

long long multiplicity_of(ConstraintKind kind);

const char* to_string(ConstraintKind kind);

struct ConstraintItem {
  ConstraintKind kind;
  long long count = 0;
};

// lower_bound > budget means two distinct curves would exceed the homological
// intersection number d.d, so the curve satisfying the constraints is unique.
struct UniquenessVerdict {
  long long lower_bound = 0;
  long long budget = 0;
  bool forced_unique = false;
};

// Throws std::invalid_argument on a negative count.
UniquenessVerdict uniqueness_verdict(long long dd_budget, const std::vector<ConstraintItem>& items);
UniquenessVerdict uniqueness_verdict(const SurfaceClass& cls,
                                     const std::vector<ConstraintItem>& items);

// The three standing scenarios, parameterized by the class; nullopt when some
// count would be negative (the configuration is not well-posed there).
//
// prescribed_nodes: delta nodes pinned at points, the rest simple points
//   -> (c1d-1-2*delta) + 4*delta = dd + 1
// reducible_wall: all c1d-1 points simple, the delta nodes shadowed
//   -> (c1d-1) + 2*delta = dd + 1
// nodal_at_point: one pinned node, remaining nodes shadowed
//   -> (c1d-3) + 4 + 2*(delta-1) = dd + 1
std::optional<std::vector<ConstraintItem>> scenario_prescribed_nodes(const SurfaceClass& cls);
std::optional<std::vector<ConstraintItem>> scenario_reducible_wall(const SurfaceClass& cls);
std::optional<std::vector<ConstraintItem>> scenario_nodal_at_point(const SurfaceClass& cls);

}  // namespace realenum
