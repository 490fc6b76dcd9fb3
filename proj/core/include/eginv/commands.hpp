#pragma once

#include <cstdint>
#include <string>

#include "eginv/types.hpp"

namespace eginv {

// Process exit contract, total over every run:
//   0 ok, 2 parse error, 3 condition check failed, 4 no solution,
//   5 refused (preconditions of the requested route not met), 6 internal.
enum class ExitCode : int {
  Ok = 0,
  ParseFail = 2,
  ConditionFail = 3,
  NoSolutionFail = 4,
  RefusedFail = 5,
  InternalFail = 6,
};

std::string exit_code_name(ExitCode code);

struct CommandOptions {
  std::string method = "auto";  // solve: auto | canonical | general
  double tolerance = 1e-9;      // overrides the condition/inclusion thresholds
  std::uint64_t seed = 1;       // gen
  int degree = 4;               // gen, sequence instance
  std::string instance = "matrix";
  int p = 3;
  int q = 3;
  std::string output_g;           // gen: ground-truth element path
  int selftest_matrix = 200;      // selftest corpus sizes
  int selftest_sequence = 200;
  std::string fixture_dir;        // selftest: on-disk fixtures ("" = embedded)
};

struct CommandResult {
  ExitCode code = ExitCode::InternalFail;
  std::string report;  // JSON document
};

CommandResult cmd_check(const std::string& input_path, const CommandOptions& opt = {});
CommandResult cmd_solve(const std::string& input_path, const CommandOptions& opt = {});
CommandResult cmd_invert(const std::string& input_path, const std::string& g_path,
                         const CommandOptions& opt = {});
CommandResult cmd_gen(const std::string& output_data_path, const CommandOptions& opt = {});
CommandResult cmd_selftest(const CommandOptions& opt = {});

}  // namespace eginv
