#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "realenum/numeric.hpp"

namespace realenum {

struct BoundedEdge {
  int lower = 0;
  int upper = 0;
  int weight = 1;
  auto operator<=>(const BoundedEdge&) const = default;
};

// Weighted ordered tree encoding a degree-d genus-0 tropical plane curve.
// Floors are numbered 1..degree in their fixed order; every bounded edge goes
// strictly upward; each floor has divergence one (weights out and to infinity
// minus weights in); the degree unbounded edges all have weight one.
struct FloorDiagram {
  int degree = 0;
  std::vector<BoundedEdge> bounded;  // canonical: sorted
  std::vector<int> unbounded;        // floor per unbounded edge, sorted, size == degree

  // Checks the tree, orientation, divergence and unbounded-edge rules; throws
  // std::invalid_argument with the failed rule.
  void validate() const;

  // "(1>2:1)(2>3:2)[3,3,3]": bounded edges then unbounded floors.
  std::string canonical_key() const;
};

struct Multiplicities {
  Integer mu_complex;  // product of squared bounded-edge weights
  int mu_real = 0;     // 0 on any even weight, else (-1)^(sum (w-1)/2)
};

Multiplicities multiplicities(const FloorDiagram& diagram);

// Number of order-preserving bijections onto 1..3d-1 (floors in their fixed
// order, each bounded edge between its endpoints, each unbounded edge above
// its floor), counted up to automorphisms fixing the floors.
Integer count_markings(const FloorDiagram& diagram);

Integer automorphism_order(const FloorDiagram& diagram);

struct CensusRow {
  FloorDiagram diagram;
  Integer nu;
  Integer mu_complex;
  int mu_real = 0;
};

struct DiagramCount {
  int degree = 0;
  Integer n_complex;              // sum nu * mu_complex over the census
  Integer w_real;                 // sum nu * mu_real
  std::vector<CensusRow> census;  // sorted by canonical key; empty in streaming mode
};

inline constexpr int kMaxDegree = 10;
inline constexpr int kCensusDegreeCap = 6;  // past this, fold sums without storing rows

// Visits every diagram of the degree exactly once, deterministic order.
// Throws std::out_of_range unless 1 <= degree <= kMaxDegree.
void for_each_diagram(int degree, const std::function<void(const FloorDiagram&)>& visit);

std::vector<FloorDiagram> enumerate_diagrams(int degree);

struct CountOptions {
  int jobs = 1;
  std::optional<bool> census;  // default: degree <= kCensusDegreeCap
};

// Enumerates and folds nu * mu sums. With jobs > 1 the search space is
// partitioned by the top floor's edge configuration and folded across
// workers; the result is identical to the serial fold.
DiagramCount count_degree(int degree, const CountOptions& opts = {});

// One row per diagram: canonical key, marking count, multiplicities.
std::string census_table(const DiagramCount& count);

}  // namespace realenum
