// Runs every acceptance criterion and prints one PASS/FAIL line each.

#include <iostream>

#include "ulambda/report.hpp"

int main() {
  const auto results = ulambda::run_acceptance(std::cout);
  return ulambda::all_passed(results) ? 0 : 1;
}
