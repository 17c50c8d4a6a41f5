// One line per acceptance criterion; exit status 1 if any fails.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "slitwalk/verify.hpp"

int main(int argc, char** argv) {
  using namespace slitwalk;
  int first = 1, last = acceptance_count();
  if (argc > 1) first = last = std::atoi(argv[1]);
  int failed = 0;
  for (int c = first; c <= last; ++c) {
    const CheckResult r = run_acceptance(c);
    std::printf("%s %s (%.3f s", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds);
    if (r.limit_seconds > 0) std::printf(", limit %.0f s", r.limit_seconds);
    std::printf("): %s\n", r.detail.c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
