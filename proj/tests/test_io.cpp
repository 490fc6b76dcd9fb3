#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "eginv/commands.hpp"
#include "eginv/fixtures.hpp"
#include "eginv/io.hpp"
#include "eginv/solver.hpp"

using namespace eginv;

#ifndef EGINV_FIXTURE_DIR
#define EGINV_FIXTURE_DIR ""
#endif

namespace {

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "eginv_io_test";
  std::filesystem::create_directories(dir);
  return dir;
}

double dataset_dist(const DataSet& a, const DataSet& b) {
  return std::max(std::max(dist(a.alpha, b.alpha), dist(a.beta, b.beta)),
                  std::max(dist(a.gamma, b.gamma), dist(a.delta, b.delta)));
}

}  // namespace

TEST_CASE("data sets round-trip bit-for-bit through the text format") {
  const auto dir = temp_dir();
  for (const DataSet& data :
       {fixtures::triangular_p3(), fixtures::trivial_sequence_p2q1(),
        generate_random_instance(AlgebraInstance::sequence(2, 3), 4, 99).data}) {
    const std::string path = (dir / "roundtrip.json").string();
    write_dataset_file(path, data);
    const DataSet back = read_dataset_file(path);
    CHECK(dataset_dist(back, data) == 0.0);
    // Writing the re-read data reproduces the document bytes.
    CHECK(format_dataset(back) == format_dataset(data));
  }
}

TEST_CASE("elements round-trip bit-for-bit") {
  const auto dir = temp_dir();
  const AlgebraInstance inst = AlgebraInstance::sequence(2, 2);
  const GeneratedInstance gen = generate_random_instance(inst, 3, 17);
  const std::string path = (dir / "element.json").string();
  write_element_file(path, inst, gen.g);
  const ElementFile back = read_element_file(path);
  CHECK(back.inst == inst);
  CHECK(dist(back.value, gen.g) == 0.0);
}

TEST_CASE("on-disk fixtures match the embedded documents") {
  const std::string dir = EGINV_FIXTURE_DIR;
  REQUIRE(!dir.empty());
  CHECK(dataset_dist(read_dataset_file(dir + "/triangular_p3.json"), fixtures::triangular_p3()) == 0.0);
  CHECK(dataset_dist(read_dataset_file(dir + "/singular_diagonal_p2.json"), fixtures::singular_diagonal_p2()) ==
        0.0);
  CHECK(dataset_dist(read_dataset_file(dir + "/trivial_matrix_p2.json"), fixtures::trivial_matrix_p2()) == 0.0);
  CHECK(dataset_dist(read_dataset_file(dir + "/trivial_sequence_p2q1.json"),
                     fixtures::trivial_sequence_p2q1()) == 0.0);
  CHECK(dist(read_element_file(dir + "/triangular_p3_g.json").value, fixtures::triangular_p3_g()) == 0.0);
  CHECK(dist(read_element_file(dir + "/singular_diagonal_p2_g.json").value,
             fixtures::singular_diagonal_p2_g()) == 0.0);
}

TEST_CASE("parse errors carry the offending location") {
  CHECK_THROWS_WITH_AS(parse_dataset("{", "bad.json"), doctest::Contains("bad.json"), Error);
  CHECK_THROWS_WITH_AS(parse_dataset(R"({"format": "eginv-dataset", "instance": "matrix", "p": 2})", "f"),
                       doctest::Contains("alpha"), Error);

  // Membership violation: an alpha entry below the diagonal.
  const std::string bad = R"({
    "format": "eginv-dataset", "instance": "matrix", "p": 2, "q": 2,
    "alpha": [[[1.0, 0.0], [0.0, 0.0]], [[0.5, 0.0], [1.0, 0.0]]],
    "beta": [[[0.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]],
    "gamma": [[[0.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]],
    "delta": [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]]
  })";
  CHECK_THROWS_WITH_AS(parse_dataset(bad, "f"), doctest::Contains("(2,1)"), Error);

  // Sequence coefficient outside its part.
  const std::string bad2 = R"({
    "format": "eginv-dataset", "instance": "sequence", "p": 1, "q": 1,
    "alpha": [{"j": 0, "matrix": [[[1.0, 0.0]]]}],
    "beta": [],
    "gamma": [{"j": 2, "matrix": [[[0.5, 0.0]]]}],
    "delta": [{"j": 0, "matrix": [[[1.0, 0.0]]]}]
  })";
  CHECK_THROWS_WITH_AS(parse_dataset(bad2, "f"), doctest::Contains("j=2"), Error);

  const std::string bad3 = R"({
    "format": "eginv-dataset", "instance": "matrix", "p": 2, "q": 2,
    "alpha": [[[1.0, 0.0], "x"], [[0.0, 0.0], [1.0, 0.0]]],
    "beta": [[[0.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]],
    "gamma": [[[0.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]],
    "delta": [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]]
  })";
  CHECK_THROWS_WITH_AS(parse_dataset(bad3, "f"), doctest::Contains("row 0, col 1"), Error);
}

TEST_CASE("command layer maps outcomes onto the exit contract") {
  const auto dir = temp_dir();
  const std::string good = (dir / "good.json").string();
  write_dataset_file(good, fixtures::triangular_p3());

  CHECK(cmd_check(good).code == ExitCode::Ok);
  CHECK(cmd_solve(good).code == ExitCode::Ok);

  // Corrupt one entry: conditions fail, solve reports no solution.
  DataSet data = fixtures::triangular_p3();
  MatSeq beta = data.beta;
  CMat b0 = beta.coeff(0);
  b0(0, 1) += 0.01;
  beta.set_coeff(0, b0);
  const std::string broken = (dir / "broken.json").string();
  write_dataset_file(broken, DataSet::make(data.inst, data.alpha, beta, data.gamma, data.delta));
  const CommandResult chk = cmd_check(broken);
  CHECK(chk.code == ExitCode::ConditionFail);
  CHECK(chk.report.find("condition-fail") != std::string::npos);
  CHECK(cmd_solve(broken).code == ExitCode::NoSolutionFail);

  CHECK(cmd_check((dir / "missing.json").string()).code == ExitCode::ParseFail);

  // Refused regime surfaces through solve and invert.
  const std::string singular = (dir / "singular.json").string();
  write_dataset_file(singular, fixtures::singular_diagonal_p2());
  CHECK(cmd_solve(singular, {.method = "general"}).code == ExitCode::RefusedFail);
  const std::string gfile = (dir / "g.json").string();
  write_element_file(gfile, AlgebraInstance::triangular(2), fixtures::singular_diagonal_p2_g());
  const CommandResult inv = cmd_invert(singular, gfile);
  CHECK(inv.code == ExitCode::RefusedFail);
  CHECK(inv.report.find("oracle") != std::string::npos);
}

TEST_CASE("generation command writes a deterministic solvable pair") {
  const auto dir = temp_dir();
  CommandOptions opt;
  opt.instance = "sequence";
  opt.p = 2;
  opt.q = 2;
  opt.degree = 3;
  opt.seed = 42;
  const std::string d1 = (dir / "gen1.json").string();
  const std::string d2 = (dir / "gen2.json").string();
  opt.output_g = (dir / "gen1.g.json").string();
  REQUIRE(cmd_gen(d1, opt).code == ExitCode::Ok);
  opt.output_g = (dir / "gen2.g.json").string();
  REQUIRE(cmd_gen(d2, opt).code == ExitCode::Ok);
  CHECK(read_text_file(d1) == read_text_file(d2));

  CHECK(cmd_check(d1).code == ExitCode::Ok);
  const DataSet data = read_dataset_file(d1);
  const MatSeq g = read_element_file((dir / "gen1.g.json").string()).value;
  const SolveReport rep = solve_general(data);
  REQUIRE(rep.status == SolveStatus::Solved);
  CHECK(dist(rep.g, g) / std::max(1.0, g.norm()) < 1e-8);
}
