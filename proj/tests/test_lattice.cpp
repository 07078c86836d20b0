#include <vector>

#include "doctest.h"

#include "realenum/acceptance.hpp"
#include "realenum/lattice.hpp"
#include "realenum/rng.hpp"

using namespace realenum;

namespace {

SeedEntry seed(const SurfaceClass& cls, long long sigma, long long s, long long value) {
  return SeedEntry{cls, {sigma, s}, Integer(value), "test"};
}

std::vector<SeedEntry> degree3_chi_seeds(const SurfaceClass& cls) {
  std::vector<SeedEntry> seeds;
  for (long long r = 0; r <= 8; r += 2) seeds.push_back(seed(cls, 0, r, r));
  return seeds;
}

}  // namespace

TEST_CASE("degree 1 grid without seeds has a single generator") {
  const SurfaceClass cls = SurfaceClass::cp2(1);
  const ThetaGrid grid = build_grid(cls, {});
  REQUIRE(grid.unknowns.size() == 1);
  CHECK(grid.unknowns[0].name == "theta(1,0,0)");
  CHECK(grid.cell({0, 2}) == grid.cell({0, 0}));  // the sigma = 1 row is node-budget zero
  CHECK_FALSE(grid.cell({0, 2}).is_constant());
}

TEST_CASE("degree 1 grid with its two seeds is the constant pair") {
  const SurfaceClass cls = SurfaceClass::cp2(1);
  const ThetaGrid grid = build_grid(cls, {seed(cls, 0, 0, 1), seed(cls, 0, 2, 1)});
  CHECK(grid.unknowns.empty());
  CHECK(grid.cell({0, 0}) == AffineExpr(Integer(1)));
  CHECK(grid.cell({0, 2}) == AffineExpr(Integer(1)));
}

TEST_CASE("degree 4 grid seeded on the sigma = 3 row has three generators") {
  const SurfaceClass cls = SurfaceClass::cp2(4);
  const ThetaGrid grid =
      build_grid(cls, {seed(cls, 3, 4, 1), seed(cls, 3, 6, 1), seed(cls, 3, 8, 1)});
  REQUIRE(grid.unknowns.size() == 3);
  CHECK(grid.unknowns[0].name == "theta(4,0,1)");
  CHECK(grid.unknowns[1].name == "theta(4,1,2)");
  CHECK(grid.unknowns[2].name == "theta(4,2,3)");

  CHECK(render_relation(grid, 3) == "chi[4,3] = chi[4,1] + 2*theta[4,1,2]");
  CHECK(render_relation(grid, 5) == "chi[4,5] = chi[4,1] + 4*theta[4,1,2] + 4*theta[4,2,3]");
  CHECK(render_relation(grid, 7) ==
        "chi[4,7] = chi[4,1] + 6*theta[4,1,2] + 12*theta[4,2,3] + 8");
  CHECK_THROWS_AS(derive_relation(grid, 2), std::invalid_argument);
  CHECK_THROWS_AS(derive_relation(grid, 12), std::invalid_argument);
}

TEST_CASE("degree 5 grid accepts its two seeds and zeroes the overbudget row") {
  const SurfaceClass cls = SurfaceClass::cp2(5);
  const ThetaGrid grid = build_grid(cls, {seed(cls, 6, 6, 1), seed(cls, 6, 8, 1)});
  CHECK(grid.cell({7, 7}).is_zero());
  CHECK(grid.cell({6, 8}) == AffineExpr(Integer(1)));
  CHECK(render_relation(grid, 14) ==
        "chi[5,14] = chi[5,0] + 14*theta[5,1,1] + 84*theta[5,2,2] + 280*theta[5,3,3]"
        " + 560*theta[5,4,4] + 672*theta[5,5,5] + 448");
}

TEST_CASE("degree <= 3 polynomials from seeds") {
  {
    const SurfaceClass cls = SurfaceClass::cp2(2);
    const ThetaGrid grid =
        build_grid(cls, {seed(cls, 0, 1, 1), seed(cls, 0, 3, 1), seed(cls, 0, 5, 1)});
    const ChiPolynomial poly = chi_polynomial(grid);
    CHECK(render_polynomial(poly) == "T + T^3 + T^5");
    CHECK(chi_theta_relation_residual(grid, 3).is_zero());
    CHECK(grid.cell({1, 4}).is_zero());  // forced by equal neighbours, matches delta = 0
  }
  {
    const SurfaceClass cls = SurfaceClass::cp2(3);
    const ThetaGrid grid = build_grid(cls, degree3_chi_seeds(cls));
    const ChiPolynomial poly = chi_polynomial(grid);
    CHECK(render_polynomial(poly) == "2*T^2 + 4*T^4 + 6*T^6 + 8*T^8");
    // the one-node row is recovered, not seeded
    for (long long q = 1; q <= 7; q += 2) CHECK(grid.cell({1, q}) == AffineExpr(Integer(1)));
    CHECK(chi_theta_relation_residual(grid, 2).is_zero());
  }
}

TEST_CASE("relation residual is identically zero across a symbolic grid") {
  const SurfaceClass cls = SurfaceClass::cp2(4);
  const ThetaGrid grid = build_grid(cls, {});
  for (long long r = 0; r <= cls.c1d() - 3; ++r)
    CHECK(chi_theta_relation_residual(grid, r).is_zero());
  CHECK_THROWS_AS(chi_theta_relation_residual(grid, cls.c1d() - 2), std::out_of_range);
}

TEST_CASE("seed conflicts are hard errors") {
  const SurfaceClass cls = SurfaceClass::cp2(3);
  // chi_0 = 0 and chi_2 = 4 force theta(3,1,1) = 2; seeding it to 1 conflicts
  std::vector<SeedEntry> seeds = {seed(cls, 0, 0, 0), seed(cls, 0, 2, 4), seed(cls, 1, 1, 1)};
  CHECK_THROWS_AS(build_grid(cls, seeds), SeedConflictError);
  // an odd gap forces a half-integer value
  std::vector<SeedEntry> fractional = {seed(cls, 0, 0, 0), seed(cls, 0, 2, 3)};
  CHECK_THROWS_AS(build_grid(cls, fractional), SeedConflictError);
}

TEST_CASE("seed validation") {
  const SurfaceClass cls = SurfaceClass::cp2(4);
  CHECK_THROWS_AS(build_grid(cls, {seed(cls, 0, 2, 1)}), std::invalid_argument);  // parity zero
  CHECK_THROWS_AS(build_grid(cls, {seed(cls, 3, 4, 1), seed(cls, 3, 4, 1)}),
                  std::invalid_argument);  // duplicate
  const SurfaceClass other = SurfaceClass::cp2(5);
  CHECK_THROWS_AS(build_grid(cls, {seed(other, 6, 6, 1)}), std::invalid_argument);
}

TEST_CASE("non-triviality certificates") {
  const SurfaceClass d4 = SurfaceClass::cp2(4);
  {
    const ThetaGrid grid =
        build_grid(d4, {seed(d4, 3, 4, 1), seed(d4, 3, 6, 1), seed(d4, 3, 8, 1)});
    const NontrivialityCertificate cert = nontriviality_certificate(chi_polynomial(grid));
    REQUIRE(cert.nontrivial);
    CHECK(verify_witness(cert.system, *cert.witness));
    CHECK(cert.witness->constant != 0);
  }
  {
    const ThetaGrid grid = build_grid(d4, {});
    const NontrivialityCertificate cert = nontriviality_certificate(chi_polynomial(grid));
    CHECK_FALSE(cert.nontrivial);
  }
  const SurfaceClass d5 = SurfaceClass::cp2(5);
  {
    const ThetaGrid grid = build_grid(d5, {seed(d5, 6, 6, 1), seed(d5, 6, 8, 1)});
    CHECK(nontriviality_certificate(chi_polynomial(grid)).nontrivial);
  }
}

TEST_CASE("random grids satisfy the recursion and the closed form") {
  SplitMix64 rng(909);
  for (int trial = 0; trial < 50; ++trial) {
    const long long c1d = rng.range(1, 24);
    const long long dd = c1d - 2 + 2 * rng.range(0, 12);
    const SurfaceClass cls(c1d, dd, "random");
    const ThetaGrid grid = build_grid(cls, {});
    for (const auto& [idx, cell] : grid.cells) {
      if (theta_domain(cls, idx) != CellDomain::Valid || idx.s < idx.sigma + 2) continue;
      CHECK(cell == grid.cell({idx.sigma, idx.s - 2}) +
                        Integer(2) * grid.cell({idx.sigma + 1, idx.s - 1}));
    }
    for (long long r = 0; r <= cls.point_budget(); ++r) {
      if (!cls.chi_parity_admissible(r)) continue;
      CHECK(grid.cell({0, r}) == closed_form_chi(grid, r));
    }
    // integer substitution keeps the recursion numerically exact
    std::map<UnknownSymbol, Integer> assignment;
    for (const auto& u : grid.unknowns) assignment[u] = Integer(rng.range(-50, 50));
    for (const auto& [idx, cell] : grid.cells) {
      if (theta_domain(cls, idx) != CellDomain::Valid || idx.s < idx.sigma + 2) continue;
      CHECK(cell.eval(assignment) ==
            grid.cell({idx.sigma, idx.s - 2}).eval(assignment) +
                2 * grid.cell({idx.sigma + 1, idx.s - 1}).eval(assignment));
    }
  }
}

TEST_CASE("non-valid cells hold the zero expression") {
  const SurfaceClass cls = SurfaceClass::cp2(5);
  const ThetaGrid grid = build_grid(cls, {});
  for (const auto& [idx, cell] : grid.cells)
    if (theta_domain(cls, idx) != CellDomain::Valid) CHECK(cell.is_zero());
  CHECK(grid.cell({99, 99}).is_zero());  // out of domain, not stored
}

TEST_CASE("cubic-surface line class degenerates to its seed") {
  const SurfaceClass cls(1, -1, "cubic surface line (k=1)");
  const ThetaGrid grid = build_grid(cls, {seed(cls, 0, 0, 7)});
  CHECK(grid.unknowns.empty());
  CHECK(grid.cell({0, 0}) == AffineExpr(Integer(7)));
  const ChiPolynomial poly = chi_polynomial(grid);
  CHECK(poly.coefficients.size() == 1);
}
