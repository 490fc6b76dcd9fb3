// Acceptance battery: runs every verification criterion at its pinned
// tolerance and prints one PASS/FAIL line per criterion.

#include <cstdio>

#include "eginv/selftest.hpp"

#ifndef EGINV_FIXTURE_DIR
#define EGINV_FIXTURE_DIR ""
#endif

int main() {
  const auto results = eginv::selftest::run_all({}, EGINV_FIXTURE_DIR);
  int idx = 0;
  for (const auto& r : results) {
    ++idx;
    std::printf("[%d/%zu] %s  %-42s (%.0f ms)  %s\n", idx, results.size(), r.pass ? "PASS" : "FAIL",
                r.name.c_str(), r.ms, r.detail.c_str());
  }
  const bool ok = eginv::selftest::all_passed(results);
  std::printf("%s\n", ok ? "acceptance: all criteria passed" : "acceptance: FAILURES present");
  return ok ? 0 : 1;
}
