#include "realenum/acceptance.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include "realenum/bezout.hpp"
#include "realenum/floor.hpp"
#include "realenum/gw.hpp"
#include "realenum/numeric.hpp"
#include "realenum/rng.hpp"
#include "realenum/seeds.hpp"
#include "realenum/wallsim.hpp"

namespace realenum {

namespace {

// One check list per criterion; the first failed expectation is reported.
struct Checker {
  std::ostringstream log;
  bool ok = true;
  int checks = 0;

  void expect(bool condition, const std::string& what) {
    ++checks;
    if (!condition && ok) {
      ok = false;
      log << what;
    }
  }
};

SeedDatabase paper_seeds() { return load_seed_database(default_seed_path()); }

ThetaGrid seeded_grid(const SeedDatabase& db, int degree) {
  const SurfaceClass cls = SurfaceClass::cp2(degree);
  return build_grid(cls, seeds_for(db, cls));
}

// valid random class with c1d <= 24
SurfaceClass random_class(SplitMix64& rng) {
  const long long c1d = rng.range(1, 24);
  const long long delta = rng.range(0, 12);
  const long long dd = c1d - 2 + 2 * delta;
  return SurfaceClass(c1d, dd, "random(c1d=" + std::to_string(c1d) +
                                   ",dd=" + std::to_string(dd) + ")");
}

// --- criterion 1: the printed degree-4 and degree-5 coefficient relations ---

void criterion_relation_goldens(Checker& c) {
  const SeedDatabase db = paper_seeds();
  const ThetaGrid g4 = seeded_grid(db, 4);
  const ThetaGrid g5 = seeded_grid(db, 5);

  const std::vector<std::pair<long long, std::string>> goldens4 = {
      {3, "chi[4,3] = chi[4,1] + 2*theta[4,1,2]"},
      {5, "chi[4,5] = chi[4,1] + 4*theta[4,1,2] + 4*theta[4,2,3]"},
      {7, "chi[4,7] = chi[4,1] + 6*theta[4,1,2] + 12*theta[4,2,3] + 8"},
      {9, "chi[4,9] = chi[4,1] + 8*theta[4,1,2] + 24*theta[4,2,3] + 32"},
      {11, "chi[4,11] = chi[4,1] + 10*theta[4,1,2] + 40*theta[4,2,3] + 80"},
  };
  for (const auto& [r, text] : goldens4) {
    const std::string got = render_relation(g4, r);
    c.expect(got == text, "degree 4, r=" + std::to_string(r) + ": got \"" + got + "\"");
  }
  const std::string golden5 =
      "chi[5,14] = chi[5,0] + 14*theta[5,1,1] + 84*theta[5,2,2] + 280*theta[5,3,3]"
      " + 560*theta[5,4,4] + 672*theta[5,5,5] + 448";
  const std::string got5 = render_relation(g5, 14);
  c.expect(got5 == golden5, "degree 5, r=14: got \"" + got5 + "\"");
}

// --- criterion 2: degree <= 3 polynomials and the recovered theta row ---

void criterion_example_goldens(Checker& c) {
  const SeedDatabase db = paper_seeds();

  const auto expect_poly = [&](int degree, const std::map<long long, Integer>& expected) {
    const ThetaGrid grid = seeded_grid(db, degree);
    const ChiPolynomial poly = chi_polynomial(grid);
    for (long long r = 0; r <= grid.cls.point_budget(); ++r) {
      const AffineExpr& coeff = poly.coefficients.at(r);
      const auto it = expected.find(r);
      const Integer want = it == expected.end() ? Integer(0) : it->second;
      c.expect(coeff.is_constant() && coeff.constant() == want,
               "degree " + std::to_string(degree) + ": chi_" + std::to_string(r) + " = " +
                   coeff.render());
    }
  };
  expect_poly(1, {{0, 1}, {2, 1}});
  expect_poly(2, {{1, 1}, {3, 1}, {5, 1}});
  expect_poly(3, {{0, 0}, {2, 2}, {4, 4}, {6, 6}, {8, 8}});

  // the degree-3 theta row must come out of the chi seeds alone
  const SurfaceClass cp2_3 = SurfaceClass::cp2(3);
  std::vector<SeedEntry> chi_only;
  for (const auto& seed : seeds_for(db, cp2_3))
    if (seed.idx.sigma == 0) chi_only.push_back(seed);
  c.expect(chi_only.size() == 5, "expected the five degree-3 chi seeds");
  const ThetaGrid grid = build_grid(cp2_3, chi_only);
  for (long long q = 1; q <= 7; q += 2) {
    const AffineExpr& cell = grid.cell({1, q});
    c.expect(cell.is_constant() && cell.constant() == 1,
             "theta(3,1," + std::to_string(q) + ") = " + cell.render() + ", expected 1");
  }
  for (long long r = 0; r + 2 <= cp2_3.point_budget(); ++r)
    c.expect(chi_theta_relation_residual(grid, r).is_zero(),
             "two-step relation residual nonzero at r=" + std::to_string(r));
}

// --- criterion 3: non-triviality certificates for degrees 4 and 5 ---

void criterion_nontriviality(Checker& c) {
  const SeedDatabase db = paper_seeds();
  for (const int degree : {4, 5}) {
    const ThetaGrid grid = seeded_grid(db, degree);
    const NontrivialityCertificate cert = nontriviality_certificate(chi_polynomial(grid));
    c.expect(cert.nontrivial, "degree " + std::to_string(degree) + ": expected NON-TRIVIAL");
    if (!cert.nontrivial) continue;
    c.expect(verify_witness(cert.system, *cert.witness),
             "degree " + std::to_string(degree) + ": witness failed to verify");
    c.expect(cert.witness->constant != 0,
             "degree " + std::to_string(degree) + ": witness constant is zero");
  }
}

// --- criterion 4: recursion identity and closed form on random classes ---

void criterion_lattice_properties(Checker& c) {
  SplitMix64 rng(20240508);
  for (int trial = 0; trial < 200; ++trial) {
    const SurfaceClass cls = random_class(rng);
    const ThetaGrid grid = build_grid(cls, {});
    for (const auto& [idx, cell] : grid.cells) {
      if (theta_domain(cls, idx) != CellDomain::Valid) continue;
      if (idx.s < idx.sigma + 2) continue;
      const AffineExpr recursion =
          grid.cell({idx.sigma, idx.s - 2}) + Integer(2) * grid.cell({idx.sigma + 1, idx.s - 1});
      c.expect(cell == recursion, cls.label() + ": recursion identity fails at sigma=" +
                                      std::to_string(idx.sigma) + " s=" + std::to_string(idx.s));
    }
    for (long long r = 0; r <= cls.point_budget(); ++r) {
      if (!cls.chi_parity_admissible(r)) continue;
      c.expect(grid.cell({0, r}) == closed_form_chi(grid, r),
               cls.label() + ": closed form mismatch at r=" + std::to_string(r));
    }
  }
}

// --- criterion 5: floor-diagram counts equal the recursion counts ---

void criterion_oracle_agreement(Checker& c) {
  const std::vector<Integer> frozen = {1, 1, 12, 620, 87304};
  using clock = std::chrono::steady_clock;

  const auto serial_start = clock::now();
  for (int d = 1; d <= 5; ++d) {
    const DiagramCount count = count_degree(d, CountOptions{1, std::nullopt});
    c.expect(count.n_complex == frozen[static_cast<std::size_t>(d - 1)],
             "serial N_" + std::to_string(d) + " = " + count.n_complex.str());
    c.expect(count.n_complex == kontsevich_nd(d),
             "N_" + std::to_string(d) + " disagrees with the recursion");
  }
  const double serial_seconds =
      std::chrono::duration<double>(clock::now() - serial_start).count();
  c.expect(serial_seconds < 60.0,
           "serial run took " + std::to_string(serial_seconds) + "s (budget 60s)");

  const auto parallel_start = clock::now();
  const DiagramCount d5 = count_degree(5, CountOptions{8, std::nullopt});
  const double parallel_seconds =
      std::chrono::duration<double>(clock::now() - parallel_start).count();
  c.expect(d5.n_complex == frozen[4], "8-worker N_5 = " + d5.n_complex.str());
  c.expect(parallel_seconds < 15.0,
           "8-worker run took " + std::to_string(parallel_seconds) + "s (budget 15s)");
}

// --- criterion 6: real counts ---

void criterion_real_counts(Checker& c) {
  const std::vector<Integer> anchors = {1, 1, 8};
  for (int d = 1; d <= 5; ++d) {
    const DiagramCount count = count_degree(d, CountOptions{1, std::nullopt});
    if (d <= 3)
      c.expect(count.w_real == anchors[static_cast<std::size_t>(d - 1)],
               "W_" + std::to_string(d) + " = " + count.w_real.str());
    c.expect(count.w_real > 0, "W_" + std::to_string(d) + " not positive");
    c.expect(count.w_real <= count.n_complex, "W_" + std::to_string(d) + " exceeds N");
    c.expect((count.n_complex - count.w_real) % 2 == 0,
             "W_" + std::to_string(d) + " and N_" + std::to_string(d) + " differ in parity");
  }
}

// --- criterion 7: uniqueness verdicts ---

void criterion_bezout(Checker& c) {
  {
    const auto items = scenario_prescribed_nodes(SurfaceClass::cp2(4));
    c.expect(items.has_value(), "degree-4 prescribed-node scenario should be well-posed");
    const UniquenessVerdict v = uniqueness_verdict(SurfaceClass::cp2(4), *items);
    c.expect(v.lower_bound == 17 && v.budget == 16 && v.forced_unique,
             "degree-4 prescribed-node verdict: " + std::to_string(v.lower_bound));
  }
  for (int d = 1; d <= 10; ++d) {
    const SurfaceClass cls = SurfaceClass::cp2(d);
    const auto check_scenario = [&](const char* name, const auto& items) {
      if (!items) return;  // not well-posed at this degree
      const UniquenessVerdict v = uniqueness_verdict(cls, *items);
      c.expect(v.lower_bound == cls.dd() + 1,
               std::string(name) + " bound at degree " + std::to_string(d) + " is " +
                   std::to_string(v.lower_bound));
      c.expect(v.forced_unique, std::string(name) + " not forced at degree " + std::to_string(d));
    };
    check_scenario("prescribed-nodes", scenario_prescribed_nodes(cls));
    check_scenario("reducible-wall", scenario_reducible_wall(cls));
    check_scenario("nodal-at-point", scenario_nodal_at_point(cls));
  }
  SplitMix64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const SurfaceClass cls = random_class(rng);
    c.expect(cls.point_budget() + 2 * cls.delta() == cls.dd() + 1,
             cls.label() + ": (c1d-1) + 2*delta != dd + 1");
  }
}

// --- criterion 8: conservation along random walks ---

void criterion_conservation(Checker& c) {
  const SurfaceClass cls = SurfaceClass::cp2(4);  // delta = 3 leaves room to move
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const auto trace = random_walk(seed, 200, cls, /*marked=*/false);
    for (const auto& entry : trace)
      c.expect(entry.chi == trace.front().chi,
               "chi drift at seed " + std::to_string(seed) + " step " +
                   std::to_string(entry.step));
  }
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const auto trace = random_walk(seed, 200, cls, /*marked=*/true);
    for (const auto& entry : trace) {
      c.expect(entry.chi == trace.front().chi,
               "marked chi drift at seed " + std::to_string(seed));
      c.expect(entry.theta && entry.theta == trace.front().theta,
               "theta drift at seed " + std::to_string(seed));
    }
  }
  SplitMix64 rng(4242);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto masses = [&rng] {
      std::vector<long long> m(rng.below(6));
      for (auto& v : m) v = rng.range(0, 6);
      return m;
    };
    const CollisionIdentity id = collision_identity(masses(), masses(), masses());
    c.expect(id.chi_plus - id.chi_minus == 2 * id.theta_diff,
             "collision identity violated at trial " + std::to_string(trial));
  }
}

// --- criterion 9: node-budget zero agrees with the forced value ---

void criterion_internal_consistency(Checker& c) {
  const SeedDatabase db = paper_seeds();
  const SurfaceClass cp2_5 = SurfaceClass::cp2(5);
  const auto seeds = seeds_for(db, cp2_5);
  c.expect(seeds.size() == 2, "expected the two degree-5 theta seeds");
  const ThetaGrid grid = build_grid(cp2_5, seeds);  // no conflict raised

  c.expect(theta_domain(cp2_5, {7, 7}) == CellDomain::NodeBudgetZero,
           "sigma=7 should exceed delta=6");
  c.expect(grid.cell({7, 7}).is_zero(), "cell (7,7) should be the zero expression");
  const AffineExpr& top = grid.cell({6, 8});
  c.expect(top.is_constant() && top.constant() == 1, "cell (6,8) should equal its seed");

  // Re-derive the same zero by treating the cell as an unknown constrained by
  // the seeds through the recursion: 1 = 1 + 2x forces x = 0.
  const UnknownSymbol x = UnknownSymbol::theta(cp2_5.tag(), 7, 7);
  const AffineExpr equation = AffineExpr(Integer(1)) + Integer(2) * AffineExpr(x) -
                              AffineExpr(Integer(1));
  const FeasibilityResult result = zero_system_feasibility({equation});
  const auto* sol = std::get_if<FeasibleSolution>(&result);
  c.expect(sol != nullptr, "the one-cell system should be feasible");
  if (sol) {
    const auto it = sol->pivots.find(x);
    c.expect(it != sol->pivots.end() && it->second.forced() && it->second.constant == 0,
             "seeds should force theta(5,7,7) = 0");
  }
}

struct Criterion {
  int index;
  std::string name;
  double budget_seconds;
  void (*run)(Checker&);
};

const Criterion kCriteria[] = {
    {1, "relation-goldens", 1.0, criterion_relation_goldens},
    {2, "example-goldens", 1.0, criterion_example_goldens},
    {3, "non-triviality", 1.0, criterion_nontriviality},
    {4, "lattice-properties", 10.0, criterion_lattice_properties},
    {5, "oracle-agreement", 75.0, criterion_oracle_agreement},
    {6, "real-counts", 90.0, criterion_real_counts},
    {7, "bezout-verdicts", 1.0, criterion_bezout},
    {8, "conservation", 30.0, criterion_conservation},
    {9, "internal-consistency", 1.0, criterion_internal_consistency},
};

}  // namespace

AffineExpr closed_form_chi(const ThetaGrid& grid, long long r) {
  const long long r0 = (grid.cls.c1d() - 1) % 2;
  if (r < r0 || (r - r0) % 2 != 0)
    throw std::invalid_argument("closed form needs an admissible r");
  const long long k = (r - r0) / 2;
  AffineExpr total;
  for (long long j = 0; j <= k; ++j) {
    const Integer coeff = Integer(1) << static_cast<unsigned>(j);
    total += (coeff * binomial(k, j)) * grid.cell({j, r0 + j});
  }
  return total;
}

std::vector<CriterionResult> run_acceptance(std::optional<int> only) {
  std::vector<CriterionResult> results;
  for (const auto& criterion : kCriteria) {
    if (only && *only != criterion.index) continue;
    CriterionResult result;
    result.index = criterion.index;
    result.name = criterion.name;
    Checker checker;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(checker);
    } catch (const std::exception& e) {
      checker.expect(false, std::string("exception: ") + e.what());
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (checker.ok && result.seconds > criterion.budget_seconds) {
      checker.ok = false;
      checker.log << "over time budget of " << criterion.budget_seconds << "s";
    }
    result.passed = checker.ok;
    result.detail = checker.ok ? std::to_string(checker.checks) + " checks" : checker.log.str();
    results.push_back(std::move(result));
  }
  if (results.empty()) throw std::invalid_argument("no such acceptance criterion");
  return results;
}

void print_results(const std::vector<CriterionResult>& results, std::ostream& out) {
  for (const auto& r : results) {
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (r.passed ? "[PASS] " : "[FAIL] ") << r.index << ". " << r.name << ": " << r.detail
         << " (" << r.seconds << "s)";
    out << line.str() << "\n";
  }
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return !results.empty();
}

}  // namespace realenum
