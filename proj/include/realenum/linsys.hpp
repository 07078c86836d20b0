#pragma once

#include <map>
#include <variant>
#include <vector>

#include "realenum/affine.hpp"

namespace realenum {

// Exact certificate that a system of affine forms cannot vanish
// simultaneously: sum_i multipliers[i] * exprs[i] has an empty term map and
// constant != 0.
struct InfeasibilityWitness {
  std::vector<Rational> multipliers;  // one per input expression
  Rational constant;
};

// One pivot unknown of a feasible system expressed over the free unknowns:
// sym = constant + sum coeffs. forced() means the value is the same in every
// solution.
struct PivotForm {
  std::map<UnknownSymbol, Rational> coeffs;
  Rational constant;
  bool forced() const { return coeffs.empty(); }
};

struct FeasibleSolution {
  std::map<UnknownSymbol, Rational> assignment;  // a solution; free unknowns at 0
  std::map<UnknownSymbol, PivotForm> pivots;
  std::vector<UnknownSymbol> free_symbols;
};

using FeasibilityResult = std::variant<FeasibleSolution, InfeasibilityWitness>;

// Decides by exact rational Gauss-Jordan elimination whether all expressions
// can vanish at once. Pivoting follows the lexicographic symbol order and the
// input row order, so witnesses are reproducible byte for byte; among several
// inconsistent rows the one combining the earliest input rows is reported.
FeasibilityResult zero_system_feasibility(const std::vector<AffineExpr>& exprs);

// Recombines the expressions with the witness multipliers and checks that the
// result is the claimed nonzero constant.
bool verify_witness(const std::vector<AffineExpr>& exprs, const InfeasibilityWitness& w);

// Checks that the assignment zeroes every expression (exact rational
// arithmetic; unknowns missing from the assignment count as failure).
bool verify_assignment(const std::vector<AffineExpr>& exprs,
                       const std::map<UnknownSymbol, Rational>& assignment);

}  // namespace realenum
