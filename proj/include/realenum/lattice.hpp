#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "realenum/linsys.hpp"
#include "realenum/surface.hpp"

namespace realenum {

struct SeedEntry {
  SurfaceClass cls;
  LatticeIndex idx;
  Integer value;
  std::string provenance;
};

// Seed data contradicting values forced by the recursion and the other seeds.
// Conflicts are hard errors: the counts are invariants, so inconsistency means
// bad input data.
class SeedConflictError : public std::runtime_error {
 public:
  explicit SeedConflictError(const std::string& what) : std::runtime_error(what) {}
};

// The triangular array of signed counts theta^{sigma}_s for one class. Cells
// hold exact affine expressions over the base unknowns; every non-Valid cell
// holds the zero expression. Built once by build_grid, immutable afterwards.
struct ThetaGrid {
  SurfaceClass cls;
  std::map<LatticeIndex, AffineExpr> cells;
  std::vector<UnknownSymbol> unknowns;  // lexicographic

  // Zero expression for any index not stored (OutOfDomain in particular).
  const AffineExpr& cell(const LatticeIndex& idx) const;
};

// Fills the grid bottom-up in s with the three-term recursion
//
//   theta(sigma, s+2) = theta(sigma, s) + 2 * theta(sigma+1, s+1)
//
// licensed for 2*sigma <= c1d - 3. Valid cells with s in {sigma, sigma+1} are
// the base cells: seeded ones become constants, unseeded ones fresh unknowns
// (one per row; the other of the pair is a parity zero). Seeds sitting on
// recursion-determined cells turn into constraints; an unsatisfiable
// constraint system raises SeedConflictError, and unknowns the constraints
// pin down are substituted into all cells.
ThetaGrid build_grid(const SurfaceClass& cls, const std::vector<SeedEntry>& seeds);

// The sigma = 0 row as polynomial coefficients chi_r, 0 <= r <= c1d - 1.
struct ChiPolynomial {
  SurfaceClass cls;
  std::map<long long, AffineExpr> coefficients;
};

ChiPolynomial chi_polynomial(const ThetaGrid& grid);

// chi_r as an affine expression in the grid unknowns. Throws
// std::invalid_argument for parity-inadmissible r.
AffineExpr derive_relation(const ThetaGrid& grid, long long r);

// "chi[4,7] = chi[4,1] + 6*theta[4,1,2] + 12*theta[4,2,3] + 8"
std::string render_relation(const ThetaGrid& grid, long long r);

// "2*T^2 + 4*T^4 + ..." with symbolic coefficients parenthesized; "0" when
// every coefficient vanishes.
std::string render_polynomial(const ChiPolynomial& poly);

struct NontrivialityCertificate {
  bool nontrivial = false;
  std::optional<InfeasibilityWitness> witness;  // set when nontrivial
  std::vector<AffineExpr> system;               // coefficient expressions in r order
};

// Decides whether all coefficients can vanish simultaneously given the seeded
// constants; nontrivial verdicts carry the exact infeasibility witness.
NontrivialityCertificate nontriviality_certificate(const ChiPolynomial& poly);

// chi_{r+2} - chi_r - 2 * theta^{sigma=1}_{r+1}; identically zero in any built
// grid. Throws std::out_of_range unless 0 <= r <= c1d - 3.
AffineExpr chi_theta_relation_residual(const ThetaGrid& grid, long long r);

}  // namespace realenum
