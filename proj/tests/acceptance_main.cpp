// Acceptance battery: runs every verification criterion at its stated
// tolerance and prints one pass/fail line per criterion. Exits nonzero if
// any criterion fails. The same battery backs `schurlc verify`.

#include <cstdio>
#include <string>
#include <vector>

#include "schurlc/verify.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> only;
  for (int i = 1; i < argc; ++i) only.emplace_back(argv[i]);
  const std::vector<schurlc::CriterionResult> results =
      schurlc::run_verification(only);
  if (results.empty()) {
    std::fprintf(stderr, "no criteria matched the given suite filters\n");
    return 2;
  }
  long total_ms = 0;
  for (const schurlc::CriterionResult& r : results) {
    std::printf("%s %2d %-32s %6ld ms  %s\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.ms, r.detail.c_str());
    total_ms += r.ms;
  }
  const bool ok = schurlc::all_passed(results);
  std::printf("%s: %zu criteria, %ld ms total\n", ok ? "ALL PASS" : "FAILURES",
              results.size(), total_ms);
  return ok ? 0 : 1;
}
