#pragma once

#include <string>
#include <vector>

#include "eginv/types.hpp"

namespace eginv::selftest {

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double ms = 0.0;
};

struct CorpusConfig {
  int matrix_count = 200;    // p cycles through 2..6
  int sequence_count = 200;  // p, q cycle through 1..3, degree through 1..6
};

// Full verification battery: bundled reference problems, the randomized
// round-trip corpus with its operator-identity checks, and negative controls.
// fixture_dir == "" uses the embedded fixture documents.
std::vector<CriterionResult> run_all(const CorpusConfig& cfg = {}, const std::string& fixture_dir = "");

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace eginv::selftest
