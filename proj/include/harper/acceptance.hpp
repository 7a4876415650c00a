// Executable acceptance criteria: twelve self-contained checks, each
// asserting the library's headline numerical guarantees end to end and
// reporting one pass/fail verdict with evidence lines.  The reduced mode
// (used by the CLI self-test) runs every criterion with the smallest listed
// problem sizes and lighter Monte-Carlo trial counts while keeping every
// predicate and tolerance unchanged.
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace harper {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::vector<std::string> details;  // indented evidence lines
};

int criterion_count();  // 12

// id in [1, criterion_count()]; throws std::invalid_argument otherwise.
CriterionResult run_criterion(int id, bool reduced);

// (command, exercised library operations) pairs for the self-test coverage
// listing: every CLI command maps to at least one result-bearing operation.
std::vector<std::pair<std::string, std::string>> cli_coverage_map();

}  // namespace harper
