#include <vector>

#include "doctest.h"

#include "realenum/linsys.hpp"
#include "realenum/rng.hpp"

using namespace realenum;

namespace {

const UnknownSymbol x = UnknownSymbol::theta("t", 0, 0);
const UnknownSymbol y = UnknownSymbol::theta("t", 1, 1);
const UnknownSymbol z = UnknownSymbol::theta("t", 2, 2);

// Exhaustive search over a small rational grid; finding a zero proves
// feasibility independently of the elimination path.
bool grid_search_feasible(const std::vector<AffineExpr>& exprs) {
  std::vector<Rational> values;
  for (int num = -6; num <= 6; ++num) {
    values.emplace_back(num, 1);
    values.emplace_back(num, 2);
  }
  std::map<UnknownSymbol, Rational> assignment;
  for (const auto& a : values) {
    assignment[x] = a;
    for (const auto& b : values) {
      assignment[y] = b;
      for (const auto& c : values) {
        assignment[z] = c;
        if (verify_assignment(exprs, assignment)) return true;
      }
    }
  }
  return false;
}

AffineExpr small_expr(SplitMix64& rng) {
  AffineExpr e{Integer(rng.range(-3, 3))};
  e += AffineExpr(x, Integer(rng.range(-3, 3)));
  e += AffineExpr(y, Integer(rng.range(-3, 3)));
  e += AffineExpr(z, Integer(rng.range(-3, 3)));
  return e;
}

}  // namespace

TEST_CASE("constant gap is infeasible with the expected witness") {
  const std::vector<AffineExpr> system = {AffineExpr(x),
                                          AffineExpr(x) + AffineExpr(Integer(2))};
  const auto result = zero_system_feasibility(system);
  const auto* inf = std::get_if<InfeasibilityWitness>(&result);
  REQUIRE(inf != nullptr);
  CHECK(inf->constant == 2);
  REQUIRE(inf->multipliers.size() == 2);
  CHECK(inf->multipliers[0] == -1);
  CHECK(inf->multipliers[1] == 1);
  CHECK(verify_witness(system, *inf));
}

TEST_CASE("symmetric pair is feasible at the origin") {
  const std::vector<AffineExpr> system = {AffineExpr(x) + AffineExpr(y),
                                          AffineExpr(x) - AffineExpr(y)};
  const auto result = zero_system_feasibility(system);
  const auto* sol = std::get_if<FeasibleSolution>(&result);
  REQUIRE(sol != nullptr);
  CHECK(sol->assignment.at(x) == 0);
  CHECK(sol->assignment.at(y) == 0);
  CHECK(verify_assignment(system, sol->assignment));
}

TEST_CASE("the five degree-4 coefficient relations cannot all vanish") {
  // chi_r rows for r = 0..11, zero at even r; the witness must reduce to the
  // earliest constant, 8.
  std::vector<AffineExpr> system;
  auto row = [](Integer cx, Integer cy, Integer cz, Integer k) {
    return AffineExpr(x, std::move(cx)) + AffineExpr(y, std::move(cy)) +
           AffineExpr(z, std::move(cz)) + AffineExpr(std::move(k));
  };
  for (int r = 0; r <= 11; ++r) system.push_back(AffineExpr());
  system[1] = row(1, 0, 0, 0);
  system[3] = row(1, 2, 0, 0);
  system[5] = row(1, 4, 4, 0);
  system[7] = row(1, 6, 12, 8);
  system[9] = row(1, 8, 24, 32);
  system[11] = row(1, 10, 40, 80);

  const auto result = zero_system_feasibility(system);
  const auto* inf = std::get_if<InfeasibilityWitness>(&result);
  REQUIRE(inf != nullptr);
  CHECK(inf->constant == 8);
  CHECK(verify_witness(system, *inf));
}

TEST_CASE("agreement with grid search on random small systems") {
  SplitMix64 rng(2023);
  int found_feasible = 0;
  int found_infeasible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<AffineExpr> system;
    const int rows = static_cast<int>(rng.below(3)) + 1;
    for (int i = 0; i < rows; ++i) system.push_back(small_expr(rng));
    const auto result = zero_system_feasibility(system);
    if (const auto* sol = std::get_if<FeasibleSolution>(&result)) {
      ++found_feasible;
      CHECK(verify_assignment(system, sol->assignment));
    } else {
      ++found_infeasible;
      const auto& inf = std::get<InfeasibilityWitness>(result);
      CHECK(verify_witness(system, inf));
      CHECK_FALSE(grid_search_feasible(system));
    }
  }
  // the generator must exercise both outcomes
  CHECK(found_feasible > 10);
  CHECK(found_infeasible > 10);
}

TEST_CASE("grid-search hits imply feasibility") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<AffineExpr> system = {small_expr(rng), small_expr(rng)};
    if (!grid_search_feasible(system)) continue;
    CHECK(std::holds_alternative<FeasibleSolution>(zero_system_feasibility(system)));
  }
}

TEST_CASE("forced unknowns are reported as constants") {
  const std::vector<AffineExpr> system = {AffineExpr(y, 2) + AffineExpr(Integer(-2))};
  const auto result = zero_system_feasibility(system);
  const auto* sol = std::get_if<FeasibleSolution>(&result);
  REQUIRE(sol != nullptr);
  const auto it = sol->pivots.find(y);
  REQUIRE(it != sol->pivots.end());
  CHECK(it->second.forced());
  CHECK(it->second.constant == 1);
}

TEST_CASE("underdetermined pivots carry their free-part form") {
  const std::vector<AffineExpr> system = {AffineExpr(x) + AffineExpr(y, 4) + AffineExpr(z, 4) +
                                          AffineExpr(Integer(-10))};
  const auto result = zero_system_feasibility(system);
  const auto* sol = std::get_if<FeasibleSolution>(&result);
  REQUIRE(sol != nullptr);
  const auto it = sol->pivots.find(x);
  REQUIRE(it != sol->pivots.end());
  CHECK_FALSE(it->second.forced());
  CHECK(it->second.constant == 10);
  CHECK(it->second.coeffs.at(y) == -4);
  CHECK(it->second.coeffs.at(z) == -4);
  CHECK(sol->free_symbols == std::vector<UnknownSymbol>{y, z});
}

TEST_CASE("the empty system is feasible") {
  const auto result = zero_system_feasibility({});
  CHECK(std::holds_alternative<FeasibleSolution>(result));
}
