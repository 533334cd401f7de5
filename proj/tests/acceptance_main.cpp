// Acceptance suite runner: one pass/fail line per criterion, exit 0 iff all
// criteria pass.

#include <iostream>

#include "verify.hpp"

int main() {
  auto results = hp0::run_acceptance(&std::cout);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  std::cout << (all ? "all criteria passed" : "FAILURES present") << std::endl;
  return all ? 0 : 1;
}
