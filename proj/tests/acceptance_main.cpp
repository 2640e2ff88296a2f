// Runs the full reproduction suite and prints one PASS/FAIL line per check.
// Exits 0 only when every check passes.

#include <cstdio>

#include "ecd/verify.hpp"

int main() {
  auto suite = ecd::verify_paper_suite(false);
  int passed = 0;
  for (const auto& c : suite.checks) {
    std::printf("%s %-36s %s (%lld ms)\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                c.detail.c_str(), c.time_ms);
    if (c.pass) ++passed;
  }
  std::printf("%d/%zu checks passed\n", passed, suite.checks.size());
  return suite.all_pass ? 0 : 1;
}
