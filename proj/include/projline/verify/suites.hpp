#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace projline::verify {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> failures;
  int cases = 0;
  double seconds = 0;
  double budget_seconds = 0;
};

// Runs acceptance criterion id (1..10).
CriterionResult run_criterion(int id, std::uint64_t seed = 0);
int criterion_count();

// paper-core: 1-7, lodha-moore: 8, flows: 9, properties: 10, all: 1-10.
std::vector<std::string> suite_names();
// Unknown names give an empty list.
std::vector<int> suite_members(const std::string& name);

}  // namespace projline::verify
