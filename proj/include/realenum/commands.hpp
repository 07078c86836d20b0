#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "realenum/surface.hpp"

namespace realenum {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitSeedConflict = 3;
inline constexpr int kExitAcceptance = 4;

// CLI surface grammar: kind "cp2" expands degree d to (c1d = 3d, dd = d^2);
// kind "custom" takes the pairing integers directly.
struct SurfaceSpec {
  std::string kind = "cp2";
  int degree = 1;
  long long c1d = 0;
  long long dd = 0;
  std::string label;  // optional for custom classes

  SurfaceClass resolve() const;  // throws std::invalid_argument
};

int cmd_chi(const SurfaceSpec& spec, const std::optional<std::string>& seed_path,
            const std::string& format, std::ostream& out, std::ostream& err);

int cmd_nd(int max_degree, const std::string& format, std::ostream& out, std::ostream& err);

int cmd_wd(int degree, int jobs, std::optional<bool> census, const std::string& format,
           std::ostream& out, std::ostream& err);

// constraints: comma list of kind:count with kinds simple, node, shadow, tangent
int cmd_bezout(long long dd_budget, const std::string& constraints, const std::string& format,
               std::ostream& out, std::ostream& err);

int cmd_simulate(std::uint64_t seed, long long steps, const SurfaceSpec& spec, bool marked,
                 std::ostream& out, std::ostream& err);

// Runs the acceptance suite (all criteria, or a single one); one pass/fail
// line per criterion; exit 4 on any failure.
int cmd_check(std::optional<int> criterion, std::ostream& out, std::ostream& err);

}  // namespace realenum
