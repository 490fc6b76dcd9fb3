// Command-line front end: check | solve | invert | gen | selftest over the
// JSON data-set / element / report documents described in docs/FORMATS.md.

#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "eginv/commands.hpp"
#include "eginv/io.hpp"
#include "eginv/version.hpp"

namespace {

int finish(const eginv::CommandResult& result, const std::string& output) {
  if (output.empty()) {
    std::cout << result.report;
  } else {
    try {
      eginv::write_text_file(output, result.report);
    } catch (const std::exception& e) {
      std::cerr << "eginv: " << e.what() << "\n";
      return static_cast<int>(eginv::ExitCode::InternalFail);
    }
  }
  if (result.code != eginv::ExitCode::Ok)
    std::cerr << "eginv: exit " << static_cast<int>(result.code) << " ("
              << eginv::exit_code_name(result.code) << ")\n";
  return static_cast<int>(result.code);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twofold Ellis-Gohberg inverse problem solver"};
  app.set_version_flag("--version", std::string("eginv ") + eginv::kVersion);
  app.require_subcommand(1);

  eginv::CommandOptions opt;
  std::string input, g_input, output;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tolerance", opt.tolerance, "Condition/inclusion tolerance (default 1e-9)");
    sub->add_option("-o,--output", output, "Write the JSON report here instead of stdout");
  };

  CLI::App* check = app.add_subcommand("check", "Evaluate the compatibility conditions of a data set");
  check->add_option("input", input, "Data-set file")->required();
  add_common(check);

  CLI::App* solve = app.add_subcommand("solve", "Solve the inverse problem for a data set");
  solve->add_option("input", input, "Data-set file")->required();
  solve->add_option("--method", opt.method, "auto | canonical | general (default auto)");
  add_common(solve);

  CLI::App* invert = app.add_subcommand("invert", "Structured inversion of the operator attached to g");
  invert->add_option("input", input, "Data-set file")->required();
  invert->add_option("-g,--g", g_input, "Element file holding g")->required();
  add_common(invert);

  CLI::App* gen = app.add_subcommand("gen", "Generate a solvable data set with known solution");
  gen->add_option("data-file", input, "Data-set file to write")->required();
  gen->add_option("--instance", opt.instance, "matrix | sequence (default matrix)");
  gen->add_option("-p", opt.p, "Row dimension (default 3)");
  gen->add_option("-q", opt.q, "Column dimension (default 3; matrix instance requires p == q)");
  gen->add_option_function<std::string>(
         "--dims",
         [&opt](const std::string& dims) {
           const auto x = dims.find('x');
           if (x == std::string::npos) throw CLI::ValidationError("--dims", "expected PxQ, e.g. 2x3");
           opt.p = std::stoi(dims.substr(0, x));
           opt.q = std::stoi(dims.substr(x + 1));
         },
         "Both dimensions at once as PxQ (e.g. 2x3)")
      ->excludes("-p")
      ->excludes("-q");
  gen->add_option("--degree", opt.degree, "Support degree of g, sequence instance (default 4)");
  gen->add_option("--seed", opt.seed, "Random seed (default 1)");
  gen->add_option("--output-g", opt.output_g, "Ground-truth element file (default <output>.g.json)");
  add_common(gen);

  CLI::App* selftest = app.add_subcommand("selftest", "Run the bundled verification battery");
  selftest->add_option("--matrix-count", opt.selftest_matrix, "Matrix-instance corpus size (default 200)");
  selftest->add_option("--sequence-count", opt.selftest_sequence,
                       "Sequence-instance corpus size (default 200)");
  selftest->add_option("--fixture-dir", opt.fixture_dir, "Read fixtures from here instead of embedded copies");
  add_common(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    // Command-line usage problems share the parse-error exit status.
    return rc == 0 ? 0 : static_cast<int>(eginv::ExitCode::ParseFail);
  }

  if (check->parsed()) return finish(eginv::cmd_check(input, opt), output);
  if (solve->parsed()) return finish(eginv::cmd_solve(input, opt), output);
  if (invert->parsed()) return finish(eginv::cmd_invert(input, g_input, opt), output);
  if (gen->parsed()) return finish(eginv::cmd_gen(input, opt), output);
  if (selftest->parsed()) return finish(eginv::cmd_selftest(opt), output);
  return static_cast<int>(eginv::ExitCode::InternalFail);
}
