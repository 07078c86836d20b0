#include "realenum/numeric.hpp"

#include <mutex>
#include <vector>

namespace realenum {

namespace {

std::mutex table_mutex;
std::vector<std::vector<Integer>> pascal_rows = {{1}};
std::vector<Integer> factorials = {1};

}  // namespace

Integer binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::lock_guard lock(table_mutex);
  while (static_cast<long long>(pascal_rows.size()) <= n) {
    const auto& prev = pascal_rows.back();
    std::vector<Integer> row(prev.size() + 1, 1);
    for (std::size_t j = 1; j + 1 < row.size(); ++j) row[j] = prev[j - 1] + prev[j];
    pascal_rows.push_back(std::move(row));
  }
  return pascal_rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Integer factorial(long long n) {
  if (n < 0) return 0;
  std::lock_guard lock(table_mutex);
  while (static_cast<long long>(factorials.size()) <= n)
    factorials.push_back(factorials.back() * Integer(factorials.size()));
  return factorials[static_cast<std::size_t>(n)];
}

}  // namespace realenum
