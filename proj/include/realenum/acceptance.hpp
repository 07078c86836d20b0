#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "realenum/lattice.hpp"

namespace realenum {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// Binomial closed form for the sigma = 0 row,
//
//   chi_{r0 + 2k} = sum_{j=0..k} 2^j C(k, j) theta^{j}_{r0 + j},
//
// evaluated directly from the base cells; the independent cross-check for the
// iterative recursion.
AffineExpr closed_form_chi(const ThetaGrid& grid, long long r);

// Runs the full acceptance suite (or the single criterion given). Each
// criterion checks exact values and its own wall-clock budget.
std::vector<CriterionResult> run_acceptance(std::optional<int> only = std::nullopt);

// "[PASS] 1. relation-goldens ... (0.01s)" per criterion.
void print_results(const std::vector<CriterionResult>& results, std::ostream& out);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace realenum
