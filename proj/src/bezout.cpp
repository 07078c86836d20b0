#include "realenum/bezout.hpp"

#include <stdexcept>

namespace realenum {

long long multiplicity_of(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::SimplePoint: return 1;
    case ConstraintKind::ShadowedNode: return 2;
    case ConstraintKind::SharedTangency: return 2;
    case ConstraintKind::SharedPrescribedNode: return 4;
  }
  return 0;
}

const char* to_string(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::SimplePoint: return "simple";
    case ConstraintKind::ShadowedNode: return "shadow";
    case ConstraintKind::SharedTangency: return "tangent";
    case ConstraintKind::SharedPrescribedNode: return "node";
  }
  return "?";
}

UniquenessVerdict uniqueness_verdict(long long dd_budget,
                                     const std::vector<ConstraintItem>& items) {
  UniquenessVerdict v;
  v.budget = dd_budget;
  for (const auto& item : items) {
    if (item.count < 0) throw std::invalid_argument("constraint counts must be nonnegative");
    v.lower_bound += item.count * multiplicity_of(item.kind);
  }
  v.forced_unique = v.lower_bound > v.budget;
  return v;
}

UniquenessVerdict uniqueness_verdict(const SurfaceClass& cls,
                                     const std::vector<ConstraintItem>& items) {
  return uniqueness_verdict(cls.dd(), items);
}

std::optional<std::vector<ConstraintItem>> scenario_prescribed_nodes(const SurfaceClass& cls) {
  const long long simple = cls.c1d() - 1 - 2 * cls.delta();
  if (simple < 0) return std::nullopt;
  return std::vector<ConstraintItem>{{ConstraintKind::SimplePoint, simple},
                                     {ConstraintKind::SharedPrescribedNode, cls.delta()}};
}

std::optional<std::vector<ConstraintItem>> scenario_reducible_wall(const SurfaceClass& cls) {
  return std::vector<ConstraintItem>{{ConstraintKind::SimplePoint, cls.point_budget()},
                                     {ConstraintKind::ShadowedNode, cls.delta()}};
}

std::optional<std::vector<ConstraintItem>> scenario_nodal_at_point(const SurfaceClass& cls) {
  if (cls.c1d() < 3 || cls.delta() < 1) return std::nullopt;
  return std::vector<ConstraintItem>{{ConstraintKind::SimplePoint, cls.c1d() - 3},
                                     {ConstraintKind::SharedPrescribedNode, 1},
                                     {ConstraintKind::ShadowedNode, cls.delta() - 1}};
}

}  // namespace realenum
