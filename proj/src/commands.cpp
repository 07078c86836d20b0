#include "realenum/commands.hpp"

#include <ostream>
#include <sstream>

#include "realenum/acceptance.hpp"
#include "realenum/bezout.hpp"
#include "realenum/floor.hpp"
#include "realenum/gw.hpp"
#include "realenum/lattice.hpp"
#include "realenum/report.hpp"
#include "realenum/seeds.hpp"
#include "realenum/wallsim.hpp"

namespace realenum {

namespace {

Json surface_json(const SurfaceClass& cls) {
  Json j;
  j["label"] = cls.label();
  j["c1d"] = cls.c1d();
  j["dd"] = cls.dd();
  j["delta"] = cls.delta();
  j["point_budget"] = cls.point_budget();
  return j;
}

std::vector<ConstraintItem> parse_constraints(const std::string& text) {
  std::vector<ConstraintItem> items;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    const auto colon = piece.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("constraint '" + piece + "' is not kind:count");
    const std::string kind = piece.substr(0, colon);
    long long count = 0;
    try {
      count = std::stoll(piece.substr(colon + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("constraint '" + piece + "' has a bad count");
    }
    if (kind == "simple")
      items.push_back({ConstraintKind::SimplePoint, count});
    else if (kind == "node")
      items.push_back({ConstraintKind::SharedPrescribedNode, count});
    else if (kind == "shadow")
      items.push_back({ConstraintKind::ShadowedNode, count});
    else if (kind == "tangent")
      items.push_back({ConstraintKind::SharedTangency, count});
    else
      throw std::invalid_argument("unknown constraint kind '" + kind +
                                  "' (expected simple, node, shadow, tangent)");
  }
  if (items.empty()) throw std::invalid_argument("empty constraint list");
  return items;
}

}  // namespace

SurfaceClass SurfaceSpec::resolve() const {
  if (kind == "cp2") return SurfaceClass::cp2(degree);
  if (kind == "custom") {
    const std::string name =
        label.empty() ? "custom(c1d=" + std::to_string(c1d) + ",dd=" + std::to_string(dd) + ")"
                      : label;
    return SurfaceClass(c1d, dd, name);
  }
  throw std::invalid_argument("unknown surface kind '" + kind + "'");
}

int cmd_chi(const SurfaceSpec& spec, const std::optional<std::string>& seed_path,
            const std::string& format, std::ostream& out, std::ostream& err) {
  try {
    const SurfaceClass cls = spec.resolve();
    std::vector<SeedEntry> seeds;
    Json seed_info = Json::array();
    if (seed_path) {
      const SeedDatabase db = load_seed_database(*seed_path);
      seeds = seeds_for(db, cls);
      for (const auto& s : seeds) {
        Json j;
        j["sigma"] = s.idx.sigma;
        j["s"] = s.idx.s;
        j["value"] = json_integer(s.value);
        j["provenance"] = "seed: " + s.provenance;
        seed_info.push_back(std::move(j));
      }
    }

    const ThetaGrid grid = build_grid(cls, seeds);
    const ChiPolynomial poly = chi_polynomial(grid);

    Json report;
    report["command"] = "chi";
    report["surface"] = surface_json(cls);
    if (seed_path) {
      report["seed_file"] = *seed_path;
      report["seeds"] = std::move(seed_info);
    }
    Json unknowns = Json::array();
    for (const auto& u : grid.unknowns) unknowns.push_back(u.display);
    report["unknowns"] = std::move(unknowns);

    Json relations = Json::array();
    for (long long r = 0; r <= cls.point_budget(); ++r) {
      if (!cls.chi_parity_admissible(r)) continue;
      const AffineExpr& coeff = poly.coefficients.at(r);
      Json j;
      j["r"] = r;
      j["relation"] = render_relation(grid, r);
      j["provenance"] = coeff.is_constant() ? "derived: constant from seeds and recursion"
                                            : "derived: affine in the grid unknowns";
      relations.push_back(std::move(j));
    }
    report["relations"] = std::move(relations);
    report["polynomial"] = "chi(T) = " + render_polynomial(poly);

    const NontrivialityCertificate cert = nontriviality_certificate(poly);
    Json nt;
    if (cert.nontrivial) {
      nt["verdict"] = "NON-TRIVIAL";
      std::ostringstream witness;
      bool first = true;
      for (std::size_t i = 0; i < cert.witness->multipliers.size(); ++i) {
        if (cert.witness->multipliers[i] == 0) continue;
        if (!first) witness << " + ";
        first = false;
        witness << "(" << cert.witness->multipliers[i] << ")*chi_" << i;
      }
      witness << " = " << cert.witness->constant;
      nt["witness"] = witness.str();
      nt["provenance"] = "computed: infeasibility certificate of the coefficient system";
    } else {
      nt["verdict"] = "UNKNOWN";
      nt["note"] = "all-zero coefficients feasible under the current seeds";
    }
    report["nontriviality"] = std::move(nt);

    out << render_report(report, format);
    return kExitOk;
  } catch (const SeedConflictError& e) {
    err << "error: " << e.what() << "\n";
    return kExitSeedConflict;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

int cmd_nd(int max_degree, const std::string& format, std::ostream& out, std::ostream& err) {
  try {
    if (max_degree < 1) throw std::invalid_argument("max degree must be >= 1");
    Json report;
    report["command"] = "nd";
    report["max_degree"] = max_degree;
    Json rows = Json::array();
    for (int d = 1; d <= max_degree; ++d) {
      Json j;
      j["d"] = d;
      j["n_d"] = json_integer(kontsevich_nd(d));
      j["provenance"] = "computed: degree-splitting recursion";
      rows.push_back(std::move(j));
    }
    report["counts"] = std::move(rows);
    out << render_report(report, format);
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

int cmd_wd(int degree, int jobs, std::optional<bool> census, const std::string& format,
           std::ostream& out, std::ostream& err) {
  try {
    const DiagramCount count = count_degree(degree, CountOptions{jobs, census});
    Json report;
    report["command"] = "wd";
    report["degree"] = degree;
    report["n_complex"] = json_integer(count.n_complex);
    report["w_real"] = json_integer(count.w_real);
    report["provenance"] = "computed: weighted marking sums over the diagram census";
    if (!count.census.empty()) {
      report["diagrams"] = count.census.size();
      Json rows = Json::array();
      for (const auto& row : count.census) {
        Json j;
        j["diagram"] = row.diagram.canonical_key();
        j["nu"] = json_integer(row.nu);
        j["mu_complex"] = json_integer(row.mu_complex);
        j["mu_real"] = row.mu_real;
        rows.push_back(std::move(j));
      }
      report["census"] = std::move(rows);
    }
    out << render_report(report, format);
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

int cmd_bezout(long long dd_budget, const std::string& constraints, const std::string& format,
               std::ostream& out, std::ostream& err) {
  try {
    const std::vector<ConstraintItem> items = parse_constraints(constraints);
    const UniquenessVerdict verdict = uniqueness_verdict(dd_budget, items);
    Json report;
    report["command"] = "bezout";
    report["budget"] = verdict.budget;
    report["lower_bound"] = verdict.lower_bound;
    Json parsed = Json::array();
    for (const auto& item : items)
      parsed.push_back(std::string(to_string(item.kind)) + ":" + std::to_string(item.count) +
                       " (multiplicity " + std::to_string(multiplicity_of(item.kind)) + ")");
    report["constraints"] = std::move(parsed);
    std::ostringstream verdict_line;
    verdict_line << verdict.lower_bound << (verdict.forced_unique ? " > " : " <= ")
                 << verdict.budget << ": " << (verdict.forced_unique ? "unique" : "not forced");
    report["verdict"] = verdict_line.str();
    report["provenance"] = "computed: intersection-multiplicity lower bound vs d.d";
    out << render_report(report, format);
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

int cmd_simulate(std::uint64_t seed, long long steps, const SurfaceSpec& spec, bool marked,
                 std::ostream& out, std::ostream& err) {
  try {
    if (steps < 0) throw std::invalid_argument("steps must be >= 0");
    const SurfaceClass cls = spec.resolve();
    const auto trace = random_walk(seed, steps, cls, marked);
    out << render_trace(trace);
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

int cmd_check(std::optional<int> criterion, std::ostream& out, std::ostream& err) {
  try {
    const auto results = run_acceptance(criterion);
    print_results(results, out);
    return all_passed(results) ? kExitOk : kExitAcceptance;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace realenum
