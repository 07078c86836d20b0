#pragma once

#include "realenum/affine.hpp"
#include "realenum/surface.hpp"

namespace realenum {

// Number of rational degree-d plane curves through 3d-1 generic points, by the
// degree-splitting recursion
//
//   N_1 = 1,
//   N_d = sum over d1 + d2 = d of N_d1 N_d2 d1^2 d2
//         (d2 C(3d-4, 3d1-2) - d1 C(3d-4, 3d1-1)).
//
// Exact; memoized behind a single-writer lock. Throws for d < 1. The values
// are cross-checked against the independent floor-diagram census for d <= 5.
Integer kontsevich_nd(int d);

// Same recursion with a per-call table and no shared state; used to check the
// memoized path against a fresh evaluation.
Integer kontsevich_nd_uncached(int d);

struct BoundReport {
  SurfaceClass cls;
  long long r = 0;
  Integer chi_abs;              // |chi_r|
  Integer n_d;                  // complex count
  Rational all_real_threshold;  // (n_d - |chi_r|) / 2
  bool parity_ok = false;       // chi_r == n_d (mod 2), via conjugate pairing
};

// Builds the lower-bound report for a fully determined coefficient. Throws
// std::invalid_argument when |chi| exceeds n_d (the threshold would go
// negative, so the inputs cannot both be right).
BoundReport bound_report(const SurfaceClass& cls, long long r, const Integer& chi_value,
                         const Integer& n_d);

// Convenience overload; throws std::invalid_argument on a coefficient that
// still contains free unknowns.
BoundReport bound_report(const SurfaceClass& cls, long long r,
                         const AffineExpr& chi_coefficient, const Integer& n_d);

}  // namespace realenum
