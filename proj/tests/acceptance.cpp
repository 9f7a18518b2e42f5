// Runs every acceptance criterion and prints one line per criterion.
// Optional arguments: criterion ids to run; --seed N.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "projline/verify/suites.hpp"

int main(int argc, char** argv) {
  using namespace projline::verify;
  std::uint64_t seed = 0;
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--seed" && i + 1 < argc) seed = std::strtoull(argv[++i], nullptr, 10);
    else ids.push_back(std::atoi(a.c_str()));
  }
  if (ids.empty())
    for (int i = 1; i <= criterion_count(); ++i) ids.push_back(i);
  int failed = 0;
  for (int id : ids) {
    CriterionResult r = run_criterion(id, seed);
    std::printf("criterion %2d  %s  %-48s %5d cases  %7.3fs (budget %.0fs)\n", r.id, r.pass ? "PASS" : "FAIL",
                r.title.c_str(), r.cases, r.seconds, r.budget_seconds);
    for (const auto& f : r.failures) std::printf("    %s\n", f.c_str());
    if (!r.pass) ++failed;
  }
  std::printf("%zu criteria, %d failed\n", ids.size(), failed);
  return failed == 0 ? 0 : 1;
}
