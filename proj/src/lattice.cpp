#include "realenum/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace realenum {

namespace {

const AffineExpr kZero;

std::string describe_witness(const std::vector<AffineExpr>& constraints,
                             const std::vector<LatticeIndex>& cells,
                             const InfeasibilityWitness& w) {
  std::ostringstream os;
  os << "seed conflict: ";
  bool first = true;
  for (std::size_t i = 0; i < w.multipliers.size(); ++i) {
    if (w.multipliers[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << w.multipliers[i] << ")*[cell sigma=" << cells[i].sigma
       << " s=" << cells[i].s << ": " << constraints[i].render() << "]";
  }
  os << " = " << w.constant << " != 0";
  return os.str();
}

// Converts a rational pivot form to an integer affine expression. The grid is
// integral; seeds forcing fractional values are rejected as conflicts.
AffineExpr integral_form(const UnknownSymbol& sym, const PivotForm& form) {
  if (denominator(form.constant) != 1)
    throw SeedConflictError("seed conflict: seeds force " + sym.name + " to the non-integer " +
                            form.constant.str());
  AffineExpr out((numerator(form.constant)));
  for (const auto& [free_sym, coeff] : form.coeffs) {
    if (denominator(coeff) != 1)
      throw SeedConflictError("seed conflict: seeds force a non-integer relation on " +
                              sym.name);
    out += AffineExpr(free_sym, numerator(coeff));
  }
  return out;
}

}  // namespace

const AffineExpr& ThetaGrid::cell(const LatticeIndex& idx) const {
  auto it = cells.find(idx);
  return it == cells.end() ? kZero : it->second;
}

ThetaGrid build_grid(const SurfaceClass& cls, const std::vector<SeedEntry>& seeds) {
  std::map<LatticeIndex, Integer> seed_map;
  for (const auto& seed : seeds) {
    if (!(seed.cls == cls))
      throw std::invalid_argument("seed for '" + seed.cls.label() +
                                  "' used with class '" + cls.label() + "'");
    if (theta_domain(cls, seed.idx) != CellDomain::Valid)
      throw std::invalid_argument("seed cell sigma=" + std::to_string(seed.idx.sigma) +
                                  " s=" + std::to_string(seed.idx.s) + " is " +
                                  to_string(theta_domain(cls, seed.idx)) + " for '" +
                                  cls.label() + "'");
    if (!seed_map.emplace(seed.idx, seed.value).second)
      throw std::invalid_argument("duplicate seed at sigma=" + std::to_string(seed.idx.sigma) +
                                  " s=" + std::to_string(seed.idx.s));
  }

  ThetaGrid grid{cls, {}, {}};
  std::vector<AffineExpr> constraints;
  std::vector<LatticeIndex> constrained;

  const long long budget = cls.point_budget();
  // Cells only depend on cells with smaller s, so fill in increasing s.
  for (long long s = 0; s <= budget; ++s) {
    for (long long sigma = 0; 2 * sigma <= budget; ++sigma) {
      const LatticeIndex idx{sigma, s};
      if (s < sigma || s > budget - sigma) continue;  // outside the triangle
      const CellDomain dom = theta_domain(cls, idx);
      if (dom != CellDomain::Valid) {
        grid.cells.emplace(idx, AffineExpr::zero());
        continue;
      }
      const auto seed_it = seed_map.find(idx);
      if (s <= sigma + 1) {
        // Base cell: the recursion only raises s by 2, so this generates the row.
        if (seed_it != seed_map.end()) {
          grid.cells.emplace(idx, AffineExpr(seed_it->second));
        } else {
          const UnknownSymbol sym = UnknownSymbol::theta(cls.tag(), sigma, s);
          grid.unknowns.push_back(sym);
          grid.cells.emplace(idx, AffineExpr(sym));
        }
        continue;
      }
      AffineExpr rec = grid.cell({sigma, s - 2}) + Integer(2) * grid.cell({sigma + 1, s - 1});
      if (seed_it != seed_map.end()) {
        constraints.push_back(rec - AffineExpr(seed_it->second));
        constrained.push_back(idx);
        grid.cells.emplace(idx, AffineExpr(seed_it->second));
      } else {
        grid.cells.emplace(idx, std::move(rec));
      }
    }
  }

  if (!constraints.empty()) {
    FeasibilityResult result = zero_system_feasibility(constraints);
    if (const auto* inf = std::get_if<InfeasibilityWitness>(&result))
      throw SeedConflictError(describe_witness(constraints, constrained, *inf));
    const auto& sol = std::get<FeasibleSolution>(result);
    if (!sol.pivots.empty()) {
      std::map<UnknownSymbol, AffineExpr> repl;
      for (const auto& [sym, form] : sol.pivots) repl.emplace(sym, integral_form(sym, form));
      for (auto& [idx, cell] : grid.cells) cell = cell.substitute(repl);
      std::erase_if(grid.unknowns, [&](const UnknownSymbol& u) { return repl.count(u) > 0; });
    }
  }

  std::sort(grid.unknowns.begin(), grid.unknowns.end());
  return grid;
}

ChiPolynomial chi_polynomial(const ThetaGrid& grid) {
  ChiPolynomial poly{grid.cls, {}};
  for (long long r = 0; r <= grid.cls.point_budget(); ++r)
    poly.coefficients.emplace(r, grid.cell({0, r}));
  return poly;
}

AffineExpr derive_relation(const ThetaGrid& grid, long long r) {
  if (r < 0 || r > grid.cls.point_budget() || !grid.cls.chi_parity_admissible(r))
    throw std::invalid_argument("chi_" + std::to_string(r) + " is parity-inadmissible for '" +
                                grid.cls.label() + "'");
  return grid.cell({0, r});
}

std::string render_relation(const ThetaGrid& grid, long long r) {
  const AffineExpr rhs = derive_relation(grid, r);
  return UnknownSymbol::theta(grid.cls.tag(), 0, r).display + " = " + rhs.render();
}

std::string render_polynomial(const ChiPolynomial& poly) {
  std::string out;
  for (const auto& [r, coeff] : poly.coefficients) {
    if (coeff.is_zero()) continue;
    std::string piece;
    if (coeff.is_constant()) {
      piece = coeff.constant() == 1 && r > 0 ? "" : coeff.constant().str();
    } else {
      piece = "(" + coeff.render() + ")";
    }
    if (r > 0) {
      if (!piece.empty()) piece += "*";
      piece += "T";
      if (r > 1) piece += "^" + std::to_string(r);
    }
    out += out.empty() ? piece : " + " + piece;
  }
  return out.empty() ? "0" : out;
}

NontrivialityCertificate nontriviality_certificate(const ChiPolynomial& poly) {
  NontrivialityCertificate cert;
  for (const auto& [r, coeff] : poly.coefficients) cert.system.push_back(coeff);
  FeasibilityResult result = zero_system_feasibility(cert.system);
  if (auto* inf = std::get_if<InfeasibilityWitness>(&result)) {
    cert.nontrivial = true;
    cert.witness = std::move(*inf);
  }
  return cert;
}

AffineExpr chi_theta_relation_residual(const ThetaGrid& grid, long long r) {
  if (r < 0 || r > grid.cls.c1d() - 3)
    throw std::out_of_range("relation residual needs 0 <= r <= c1d - 3");
  return grid.cell({0, r + 2}) - grid.cell({0, r}) - Integer(2) * grid.cell({1, r + 1});
}

}  // namespace realenum
