#include "doctest.h"

#include "realenum/rng.hpp"
#include "realenum/surface.hpp"

using namespace realenum;

TEST_CASE("delta from adjunction") {
  CHECK(SurfaceClass::cp2(3).delta() == 1);
  CHECK(SurfaceClass::cp2(1).delta() == 0);
  CHECK(SurfaceClass::cp2(5).delta() == 6);  // (25 - 15 + 2) / 2
  CHECK(SurfaceClass(1, -1, "cubic surface line").delta() == 0);
}

TEST_CASE("invalid classes are rejected") {
  CHECK_THROWS_AS(SurfaceClass(9, 8, "odd"), std::invalid_argument);
  CHECK_THROWS_AS(SurfaceClass(9, 5, "negative delta"), std::invalid_argument);
  CHECK_THROWS_AS(SurfaceClass(0, 0, "no positivity"), std::invalid_argument);
  CHECK_THROWS_AS(SurfaceClass::cp2(0), std::invalid_argument);
}

TEST_CASE("point budget") {
  CHECK(SurfaceClass::cp2(4).point_budget() == 11);
  CHECK(SurfaceClass::cp2(1).point_budget() == 2);
  CHECK(SurfaceClass(1, -1, "cubic surface line").point_budget() == 0);
}

TEST_CASE("chi parity admissibility") {
  const SurfaceClass d3 = SurfaceClass::cp2(3);
  CHECK(d3.chi_parity_admissible(8));
  CHECK_FALSE(d3.chi_parity_admissible(7));
  CHECK(SurfaceClass::cp2(2).chi_parity_admissible(5));
  CHECK_THROWS_AS(d3.chi_parity_admissible(-1), std::out_of_range);
  CHECK_THROWS_AS(d3.chi_parity_admissible(9), std::out_of_range);
}

TEST_CASE("exactly one of r, r+1 is admissible") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const long long c1d = rng.range(1, 30);
    const long long dd = c1d - 2 + 2 * rng.range(0, 10);
    const SurfaceClass cls(c1d, dd, "t");
    for (long long r = 0; r + 1 <= cls.point_budget(); ++r)
      CHECK(cls.chi_parity_admissible(r) != cls.chi_parity_admissible(r + 1));
  }
}

TEST_CASE("theta_domain classification") {
  const SurfaceClass d5 = SurfaceClass::cp2(5);
  CHECK(theta_domain(d5, {7, 7}) == CellDomain::NodeBudgetZero);  // delta = 6
  const SurfaceClass d4 = SurfaceClass::cp2(4);
  CHECK(theta_domain(d4, {1, 2}) == CellDomain::Valid);
  CHECK(theta_domain(d4, {0, 2}) == CellDomain::ParityZero);  // c1d - 1 = 11 odd
  CHECK(theta_domain(d4, {-1, 2}) == CellDomain::OutOfDomain);
  CHECK(theta_domain(d4, {6, 6}) == CellDomain::OutOfDomain);  // 2*sigma > 11
  CHECK(theta_domain(d4, {2, 1}) == CellDomain::OutOfDomain);  // s < sigma
  CHECK(theta_domain(d4, {1, 11}) == CellDomain::OutOfDomain);  // s > c1d - 1 - sigma
}

TEST_CASE("sigma = 0 domain agrees with chi parity") {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const long long c1d = rng.range(1, 24);
    const SurfaceClass cls(c1d, c1d - 2 + 2 * rng.range(0, 8), "t");
    for (long long r = 0; r <= cls.point_budget(); ++r) {
      const CellDomain dom = theta_domain(cls, {0, r});
      CHECK(dom == (cls.chi_parity_admissible(r) ? CellDomain::Valid : CellDomain::ParityZero));
    }
  }
}

TEST_CASE("delta is monotone in dd at fixed c1d") {
  for (long long c1d : {1, 2, 5, 12}) {
    long long prev = -1;
    for (long long k = 0; k < 6; ++k) {
      const SurfaceClass cls(c1d, c1d - 2 + 2 * k, "t");
      CHECK(cls.delta() >= 0);
      CHECK(cls.delta() > prev);
      prev = cls.delta();
    }
  }
}
