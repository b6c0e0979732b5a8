// Runs every acceptance suite at desk scale and prints one line per
// criterion.  Exit status is nonzero if any criterion fails or overruns its
// time limit.

#include <algorithm>
#include <cstdio>
#include <cstdlib>

#include "dl/verify.hpp"

int main(int argc, char** argv) {
  dl::SuiteOptions options;
  if (argc > 1) options.seed = std::strtoull(argv[1], nullptr, 10);

  std::vector<dl::SuiteReport> reports = dl::run_suites("all", options);
  std::sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) { return a.criterion < b.criterion; });

  int failed = 0;
  for (const auto& r : reports) {
    std::printf("%s criterion %2d %-12s %-48s cases=%-7lld failures=%-4lld time=%.2fs limit=%.0fs\n",
                r.passed() ? "PASS" : "FAIL", r.criterion, r.name.c_str(), r.title.c_str(),
                static_cast<long long>(r.cases), static_cast<long long>(r.failure_count), r.seconds, r.limit_seconds);
    for (const auto& f : r.failures) {
      std::printf("    inputs: %s\n    expected: %s\n    actual: %s\n", f.inputs.c_str(), f.expected.c_str(),
                  f.actual.c_str());
    }
    for (const auto& n : r.notes) std::printf("    note: %s\n", n.c_str());
    if (!r.passed()) ++failed;
  }
  std::printf("%d of %zu criteria passed (seed %llu)\n", static_cast<int>(reports.size()) - failed, reports.size(),
              static_cast<unsigned long long>(options.seed));
  return failed == 0 ? 0 : 1;
}
