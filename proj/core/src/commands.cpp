#include "eginv/commands.hpp"

#include "eginv/fixtures.hpp"
#include "eginv/io.hpp"
#include "eginv/selftest.hpp"
#include "eginv/solver.hpp"
#include "eginv/version.hpp"
#include "io_json.hpp"

namespace eginv {

using nlohmann::json;

namespace {

Tolerances tolerances_from(const CommandOptions& opt) {
  Tolerances tol;
  tol.condition = opt.tolerance;
  tol.inclusion = opt.tolerance;
  tol.equality_rel = opt.tolerance;
  return tol;
}

json report_head(const char* command) {
  return json{{"tool", "eginv"}, {"version", kVersion}, {"command", command}};
}

void put_instance(json& j, const AlgebraInstance& inst) {
  j["instance"] = inst.kind == AlgebraKind::TriangularMatrix ? "matrix" : "sequence";
  j["p"] = inst.p;
  j["q"] = inst.q;
}

json conditions_json(const CheckReport& chk) {
  json j;
  for (int k = 0; k < 6; ++k) {
    const std::string key = "C" + std::to_string(k + 1);
    if (k >= 3 && !chk.res.evaluable456)
      j[key] = nullptr;
    else
      j[key] = chk.res.r[k];
    j[key + "_pass"] = chk.pass(k);
  }
  j["evaluable_C4_C6"] = chk.res.evaluable456;
  j["scale"] = chk.res.scale;
  j["a0_invertible"] = chk.a0_invertible;
  j["d0_invertible"] = chk.d0_invertible;
  j["a0_condition"] = std::isfinite(chk.a0_cond) ? json(chk.a0_cond) : json(nullptr);
  j["d0_condition"] = std::isfinite(chk.d0_cond) ? json(chk.d0_cond) : json(nullptr);
  j["C1_C3_pass"] = chk.c123_pass();
  j["all_pass"] = chk.all_pass();
  return j;
}

const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Solved: return "solved";
    case SolveStatus::NoSolution: return "no-solution";
    case SolveStatus::Refused: return "refused";
  }
  return "?";
}

const char* method_name(SolveMethod m) {
  switch (m) {
    case SolveMethod::Canonical: return "canonical";
    case SolveMethod::General: return "general";
    case SolveMethod::OracleOnly: return "oracle-only";
  }
  return "?";
}

ExitCode code_for_error(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ParseError: return ExitCode::ParseFail;
    case ErrorKind::PreconditionFailed:
    case ErrorKind::SingularDiagonal: return ExitCode::RefusedFail;
    case ErrorKind::SingularOperator: return ExitCode::NoSolutionFail;
    default: return ExitCode::InternalFail;
  }
}

CommandResult error_result(const char* command, const Error& e) {
  json j = report_head(command);
  j["status"] = "error";
  j["error"] = e.what();
  return {code_for_error(e), j.dump(2) + "\n"};
}

CommandResult internal_result(const char* command, const std::exception& e) {
  json j = report_head(command);
  j["status"] = "error";
  j["error"] = e.what();
  return {ExitCode::InternalFail, j.dump(2) + "\n"};
}

}  // namespace

std::string exit_code_name(ExitCode code) {
  switch (code) {
    case ExitCode::Ok: return "ok";
    case ExitCode::ParseFail: return "parse-error";
    case ExitCode::ConditionFail: return "condition-fail";
    case ExitCode::NoSolutionFail: return "no-solution";
    case ExitCode::RefusedFail: return "refused";
    case ExitCode::InternalFail: return "internal-error";
  }
  return "?";
}

CommandResult cmd_check(const std::string& input_path, const CommandOptions& opt) {
  try {
    const DataSet data = read_dataset_file(input_path);
    const CheckReport chk = check_conditions(data, tolerances_from(opt));
    json j = report_head("check");
    j["input"] = input_path;
    put_instance(j, data.inst);
    j["tolerance"] = opt.tolerance;
    j["conditions"] = conditions_json(chk);
    j["status"] = chk.c123_pass() ? "ok" : "condition-fail";
    return {chk.c123_pass() ? ExitCode::Ok : ExitCode::ConditionFail, j.dump(2) + "\n"};
  } catch (const Error& e) {
    return error_result("check", e);
  } catch (const std::exception& e) {
    return internal_result("check", e);
  }
}

CommandResult cmd_solve(const std::string& input_path, const CommandOptions& opt) {
  try {
    const DataSet data = read_dataset_file(input_path);
    const Tolerances tol = tolerances_from(opt);

    SolveReport rep;
    if (opt.method == "canonical") {
      rep = solve_canonical(data, tol);
    } else if (opt.method == "general") {
      rep = solve_general(data, tol);
    } else if (opt.method == "auto") {
      const bool canonical_ok =
          invertible_one_sided(data.inst, data.alpha, SymbolRole::A, tol.invertibility) &&
          invertible_one_sided(data.inst, data.delta, SymbolRole::D, tol.invertibility);
      rep = canonical_ok ? solve_canonical(data, tol) : solve_general(data, tol);
    } else {
      fail(ErrorKind::ParseError, "unknown method \"" + opt.method + "\" (auto|canonical|general)");
    }

    json j = report_head("solve");
    j["input"] = input_path;
    put_instance(j, data.inst);
    j["tolerance"] = opt.tolerance;
    j["method"] = method_name(rep.method);
    j["status"] = status_name(rep.status);
    if (!rep.detail.empty()) j["detail"] = rep.detail;
    j["conditions"] = conditions_json(rep.conditions);
    if (rep.status == SolveStatus::Solved) {
      j["g"] = element_to_json(data.inst, rep.g);
      j["inclusion_residuals"] = rep.inclusion;
    }
    if (rep.method == SolveMethod::Canonical) j["g1_g2_mismatch"] = rep.g1_g2_mismatch;
    if (rep.method == SolveMethod::General && rep.status != SolveStatus::Refused) {
      j["r11_condition"] = rep.r11_cond;
      j["r22_condition"] = rep.r22_cond;
      if (rep.intertwine_checked) {
        j["intertwining_residuals"] = rep.intertwine.residuals;
        j["intertwining_inverse_form"] = rep.intertwine.inverse_form_evaluated;
      }
    }
    ExitCode code = ExitCode::Ok;
    if (rep.status == SolveStatus::NoSolution) code = ExitCode::NoSolutionFail;
    if (rep.status == SolveStatus::Refused) code = ExitCode::RefusedFail;
    return {code, j.dump(2) + "\n"};
  } catch (const Error& e) {
    return error_result("solve", e);
  } catch (const std::exception& e) {
    return internal_result("solve", e);
  }
}

CommandResult cmd_invert(const std::string& input_path, const std::string& g_path,
                         const CommandOptions& opt) {
  const char* cmd = "invert";
  try {
    const DataSet data = read_dataset_file(input_path);
    const ElementFile gf = read_element_file(g_path);
    if (!(gf.inst == data.inst))
      fail(ErrorKind::ParseError, g_path + ": element instance does not match the data set");
    const Tolerances tol = tolerances_from(opt);

    json j = report_head(cmd);
    j["input"] = input_path;
    j["g_input"] = g_path;
    put_instance(j, data.inst);
    j["tolerance"] = opt.tolerance;

    try {
      const InversionReport rep = invert_omega(gf.value, data, tol);
      j["method"] = "structured";
      j["status"] = "ok";
      j["omega_r_residual"] = rep.omega_r_residual;
      j["r_omega_residual"] = rep.r_omega_residual;
      j["hankel_formula_residuals"] = rep.hankel_formulas;
      j["g_formula_residuals"] = rep.g_formulas;
      j["r11_condition"] = svd_analyze(rep.R.R11).cond;
      j["r22_condition"] = svd_analyze(rep.R.R22).cond;
      return {ExitCode::Ok, j.dump(2) + "\n"};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PreconditionFailed) throw;
      // Structured route refused; fall back to the dense oracle.
      j["method"] = "oracle-only";
      j["status"] = "refused";
      j["detail"] = e.what();
      const int w = std::max(window_bound(data), gf.value.degree());
      const OracleInverse oracle = oracle_inverse(build_omega(data.inst, gf.value, w));
      j["oracle_inverse_residual"] = oracle.residual;
      j["omega_condition"] = oracle.cond;
      return {ExitCode::RefusedFail, j.dump(2) + "\n"};
    }
  } catch (const Error& e) {
    return error_result(cmd, e);
  } catch (const std::exception& e) {
    return internal_result(cmd, e);
  }
}

CommandResult cmd_gen(const std::string& output_data_path, const CommandOptions& opt) {
  try {
    AlgebraInstance inst;
    if (opt.instance == "matrix") {
      if (opt.p != opt.q) fail(ErrorKind::ParseError, "matrix instance requires p == q");
      inst = AlgebraInstance::triangular(opt.p);
    } else if (opt.instance == "sequence") {
      inst = AlgebraInstance::sequence(opt.p, opt.q);
    } else {
      fail(ErrorKind::ParseError, "unknown instance \"" + opt.instance + "\" (matrix|sequence)");
    }
    const GeneratedInstance gen = generate_random_instance(inst, opt.degree, opt.seed);
    const std::string g_path = opt.output_g.empty() ? output_data_path + ".g.json" : opt.output_g;
    write_dataset_file(output_data_path, gen.data);
    write_element_file(g_path, inst, gen.g);

    json j = report_head("gen");
    put_instance(j, inst);
    j["status"] = "ok";
    j["seed"] = gen.seed;
    j["attempts"] = gen.attempts + 1;
    j["degree"] = inst.kind == AlgebraKind::Sequence ? json(opt.degree) : json(nullptr);
    j["data_file"] = output_data_path;
    j["g_file"] = g_path;
    return {ExitCode::Ok, j.dump(2) + "\n"};
  } catch (const Error& e) {
    return error_result("gen", e);
  } catch (const std::exception& e) {
    return internal_result("gen", e);
  }
}

CommandResult cmd_selftest(const CommandOptions& opt) {
  try {
    selftest::CorpusConfig cfg;
    cfg.matrix_count = opt.selftest_matrix;
    cfg.sequence_count = opt.selftest_sequence;
    const auto results = selftest::run_all(cfg, opt.fixture_dir);

    json j = report_head("selftest");
    json list = json::array();
    for (const auto& r : results)
      list.push_back(json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"ms", r.ms}});
    j["checks"] = list;
    const bool ok = selftest::all_passed(results);
    j["status"] = ok ? "ok" : "fail";
    return {ok ? ExitCode::Ok : ExitCode::InternalFail, j.dump(2) + "\n"};
  } catch (const Error& e) {
    return error_result("selftest", e);
  } catch (const std::exception& e) {
    return internal_result("selftest", e);
  }
}

}  // namespace eginv
