#include "realenum/gw.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

#include "realenum/numeric.hpp"

namespace realenum {

namespace {

void extend_table(std::vector<Integer>& n, int d) {
  if (n.empty()) n = {0, 1};  // n[0] unused, N_1 = 1
  for (int k = static_cast<int>(n.size()); k <= d; ++k) {
    Integer total = 0;
    for (int d1 = 1; d1 < k; ++d1) {
      const int d2 = k - d1;
      const Integer b1 = binomial(3 * k - 4, 3 * d1 - 2);
      const Integer b2 = binomial(3 * k - 4, 3 * d1 - 1);
      total += n[d1] * n[d2] * Integer(d1) * Integer(d1) * Integer(d2) *
               (Integer(d2) * b1 - Integer(d1) * b2);
    }
    n.push_back(total);
  }
}

}  // namespace

Integer kontsevich_nd(int d) {
  if (d < 1) throw std::invalid_argument("kontsevich_nd needs d >= 1");
  static std::mutex memo_mutex;
  static std::vector<Integer> memo;
  std::lock_guard lock(memo_mutex);
  extend_table(memo, d);
  return memo[static_cast<std::size_t>(d)];
}

Integer kontsevich_nd_uncached(int d) {
  if (d < 1) throw std::invalid_argument("kontsevich_nd needs d >= 1");
  std::vector<Integer> table;
  extend_table(table, d);
  return table[static_cast<std::size_t>(d)];
}

BoundReport bound_report(const SurfaceClass& cls, long long r, const Integer& chi_value,
                         const Integer& n_d) {
  BoundReport report{cls, r, abs(chi_value), n_d, Rational(0), false};
  if (report.chi_abs > n_d)
    throw std::invalid_argument("|chi| = " + report.chi_abs.str() + " exceeds the complex count " +
                                n_d.str());
  report.all_real_threshold = Rational(n_d - report.chi_abs, 2);
  report.parity_ok = (chi_value - n_d) % 2 == 0;
  return report;
}

BoundReport bound_report(const SurfaceClass& cls, long long r,
                         const AffineExpr& chi_coefficient, const Integer& n_d) {
  if (!chi_coefficient.is_constant())
    throw std::invalid_argument("symbolic coefficient: chi_" + std::to_string(r) +
                                " still contains free unknowns");
  return bound_report(cls, r, chi_coefficient.constant(), n_d);
}

}  // namespace realenum
