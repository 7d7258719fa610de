#include <iostream>

#include "gaunt/acceptance.hpp"

int main() {
  const auto results = gaunt::run_acceptance();
  int failed = 0;
  for (const auto& r : results) {
    std::cout << gaunt::format_result(r) << std::endl;
    failed += !r.pass;
  }
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
