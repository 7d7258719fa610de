#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gaunt {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Runs the thirteen acceptance criteria in order. Criterion 13 reads the
/// solver statistics accumulated by 1–12, so the statistics are reset first.
/// Progress lines go to `log` when given.
std::vector<CriterionResult> run_acceptance(std::ostream* log = nullptr);

/// One line per criterion: "PASS 1 title: detail".
std::string format_result(const CriterionResult& r);

}  // namespace gaunt
