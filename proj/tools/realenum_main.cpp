#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "realenum/commands.hpp"
#include "realenum/seeds.hpp"

namespace {

void add_surface_options(CLI::App* cmd, realenum::SurfaceSpec& spec) {
  cmd->add_option("--surface", spec.kind, "cp2 or custom")->default_val("cp2");
  cmd->add_option("--degree", spec.degree, "degree for cp2 classes");
  cmd->add_option("--c1d", spec.c1d, "c1(X).d for custom classes");
  cmd->add_option("--dd", spec.dd, "d.d for custom classes");
  cmd->add_option("--label", spec.label, "label for custom classes (matches seed entries)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "realenum: exact counts of real rational curves on real rational surfaces\n"
      "(signed invariants, diagram censuses, uniqueness bounds, wall-crossing walks)"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "text or json")->default_val("text");

  // chi
  realenum::SurfaceSpec chi_spec;
  std::string chi_seeds;
  auto* chi = app.add_subcommand("chi", "build the invariant grid and print the coefficients");
  add_surface_options(chi, chi_spec);
  chi->add_option("--seeds", chi_seeds, "seed database (default: $REALENUM_SEEDS)");
  bool chi_no_seeds = false;
  chi->add_flag("--no-seeds", chi_no_seeds, "build the grid with no seed values");

  // nd
  int nd_max = 5;
  auto* nd = app.add_subcommand("nd", "complex rational-curve counts of the plane");
  nd->add_option("--max-degree", nd_max, "compute N_1 .. N_max")->default_val(5);

  // wd
  int wd_degree = 3;
  int wd_jobs = 1;
  bool wd_census = false;
  bool wd_no_census = false;
  auto* wd = app.add_subcommand("wd", "floor-diagram census: complex and real counts");
  wd->add_option("--degree", wd_degree, "diagram degree")->required();
  wd->add_option("--jobs", wd_jobs, "worker threads")->default_val(1);
  wd->add_flag("--census", wd_census, "force the per-diagram table");
  wd->add_flag("--no-census", wd_no_census, "totals only");

  // bezout
  long long bz_dd = 0;
  std::string bz_constraints;
  auto* bz = app.add_subcommand("bezout", "intersection-multiplicity uniqueness check");
  bz->add_option("--dd", bz_dd, "intersection budget d.d")->required();
  bz->add_option("--constraints", bz_constraints,
                 "comma list kind:count (simple, node, shadow, tangent)")
      ->required();

  // simulate
  realenum::SurfaceSpec sim_spec;
  sim_spec.degree = 3;
  std::uint64_t sim_seed = 0;
  long long sim_steps = 100;
  bool sim_marked = false;
  auto* sim = app.add_subcommand("simulate", "seeded wall-crossing walk; prints the trace");
  add_surface_options(sim, sim_spec);
  sim->add_option("--seed", sim_seed, "walk seed")->default_val(0);
  sim->add_option("--steps", sim_steps, "number of moves")->default_val(100);
  sim->add_flag("--marked", sim_marked, "walk a fully marked world (tracks theta)");

  // check
  bool check_all = false;
  int check_criterion = 0;
  auto* check = app.add_subcommand("check", "run the acceptance suite");
  check->add_flag("--all", check_all, "run every criterion");
  check->add_option("--criterion", check_criterion, "run a single criterion (1-9)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : realenum::kExitInput;
  }

  if (chi->parsed()) {
    std::optional<std::string> seeds;
    if (!chi_no_seeds) seeds = chi_seeds.empty() ? realenum::default_seed_path() : chi_seeds;
    return realenum::cmd_chi(chi_spec, seeds, format, std::cout, std::cerr);
  }
  if (nd->parsed()) return realenum::cmd_nd(nd_max, format, std::cout, std::cerr);
  if (wd->parsed()) {
    std::optional<bool> census;
    if (wd_census) census = true;
    if (wd_no_census) census = false;
    return realenum::cmd_wd(wd_degree, wd_jobs, census, format, std::cout, std::cerr);
  }
  if (bz->parsed())
    return realenum::cmd_bezout(bz_dd, bz_constraints, format, std::cout, std::cerr);
  if (sim->parsed())
    return realenum::cmd_simulate(sim_seed, sim_steps, sim_spec, sim_marked, std::cout, std::cerr);
  if (check->parsed()) {
    std::optional<int> criterion;
    if (!check_all && check_criterion > 0) criterion = check_criterion;
    return realenum::cmd_check(criterion, std::cout, std::cerr);
  }
  return realenum::kExitInput;
}
