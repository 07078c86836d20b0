#include "realenum/linsys.hpp"

#include <algorithm>
#include <set>

namespace realenum {

namespace {

struct Row {
  std::vector<Rational> coeffs;
  Rational constant;
  std::vector<Rational> multipliers;  // combination of input rows this row equals
  std::size_t origin;                 // original row index, for deterministic reporting
};

}  // namespace

FeasibilityResult zero_system_feasibility(const std::vector<AffineExpr>& exprs) {
  std::set<UnknownSymbol> symbol_set;
  for (const auto& e : exprs)
    for (const auto& [sym, coeff] : e.terms()) symbol_set.insert(sym);
  const std::vector<UnknownSymbol> symbols(symbol_set.begin(), symbol_set.end());

  const std::size_t n = exprs.size();
  const std::size_t m = symbols.size();

  std::vector<Row> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i].coeffs.assign(m, Rational(0));
    rows[i].constant = Rational(exprs[i].constant());
    rows[i].multipliers.assign(n, Rational(0));
    rows[i].multipliers[i] = 1;
    rows[i].origin = i;
    for (std::size_t j = 0; j < m; ++j) {
      auto it = exprs[i].terms().find(symbols[j]);
      if (it != exprs[i].terms().end()) rows[i].coeffs[j] = Rational(it->second);
    }
  }

  std::vector<std::ptrdiff_t> pivot_row_of_col(m, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && rows[pivot].coeffs[col] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(rows[rank], rows[pivot]);

    Row& prow = rows[rank];
    const Rational inv = Rational(1) / prow.coeffs[col];
    for (auto& c : prow.coeffs) c *= inv;
    prow.constant *= inv;
    for (auto& w : prow.multipliers) w *= inv;

    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || rows[r].coeffs[col] == 0) continue;
      const Rational factor = rows[r].coeffs[col];
      for (std::size_t j = 0; j < m; ++j) rows[r].coeffs[j] -= factor * prow.coeffs[j];
      rows[r].constant -= factor * prow.constant;
      for (std::size_t j = 0; j < n; ++j)
        rows[r].multipliers[j] -= factor * prow.multipliers[j];
    }
    pivot_row_of_col[col] = static_cast<std::ptrdiff_t>(rank);
    ++rank;
  }

  // Rows below the rank have no nonzero coefficient left; a nonzero constant
  // there certifies infeasibility. Pick the row built from the earliest input.
  std::ptrdiff_t bad = -1;
  for (std::size_t r = rank; r < n; ++r) {
    if (rows[r].constant == 0) continue;
    if (bad < 0 || rows[r].origin < rows[static_cast<std::size_t>(bad)].origin)
      bad = static_cast<std::ptrdiff_t>(r);
  }
  if (bad >= 0) {
    const Row& row = rows[static_cast<std::size_t>(bad)];
    return InfeasibilityWitness{row.multipliers, row.constant};
  }

  FeasibleSolution sol;
  for (std::size_t col = 0; col < m; ++col)
    if (pivot_row_of_col[col] < 0) sol.free_symbols.push_back(symbols[col]);

  for (std::size_t col = 0; col < m; ++col) {
    if (pivot_row_of_col[col] < 0) {
      sol.assignment[symbols[col]] = 0;
      continue;
    }
    const Row& row = rows[static_cast<std::size_t>(pivot_row_of_col[col])];
    PivotForm form;
    form.constant = -row.constant;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == col || row.coeffs[j] == 0) continue;
      form.coeffs[symbols[j]] = -row.coeffs[j];
    }
    sol.assignment[symbols[col]] = form.constant;
    sol.pivots.emplace(symbols[col], std::move(form));
  }
  return sol;
}

bool verify_witness(const std::vector<AffineExpr>& exprs, const InfeasibilityWitness& w) {
  if (w.multipliers.size() != exprs.size() || w.constant == 0) return false;
  std::map<UnknownSymbol, Rational> combined;
  Rational constant = 0;
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    if (w.multipliers[i] == 0) continue;
    constant += w.multipliers[i] * Rational(exprs[i].constant());
    for (const auto& [sym, coeff] : exprs[i].terms())
      combined[sym] += w.multipliers[i] * Rational(coeff);
  }
  for (const auto& [sym, coeff] : combined)
    if (coeff != 0) return false;
  return constant == w.constant;
}

bool verify_assignment(const std::vector<AffineExpr>& exprs,
                       const std::map<UnknownSymbol, Rational>& assignment) {
  for (const auto& e : exprs) {
    Rational value(e.constant());
    for (const auto& [sym, coeff] : e.terms()) {
      auto it = assignment.find(sym);
      if (it == assignment.end()) return false;
      value += Rational(coeff) * it->second;
    }
    if (value != 0) return false;
  }
  return true;
}

}  // namespace realenum
