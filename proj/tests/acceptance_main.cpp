#include <iostream>

#include "realenum/acceptance.hpp"

int main() {
  const auto results = realenum::run_acceptance();
  realenum::print_results(results, std::cout);
  return realenum::all_passed(results) ? 0 : 1;
}
