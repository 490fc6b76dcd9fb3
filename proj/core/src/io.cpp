#include "eginv/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "io_json.hpp"

namespace eginv {

using nlohmann::json;

namespace {

json entry_json(const Complex& v) { return json::array({v.real(), v.imag()}); }

Complex entry_from(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(ErrorKind::ParseError, where + ": expected a complex entry [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json matrix_json(const CMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(entry_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMat matrix_from(const json& j, int rows, int cols, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    fail(ErrorKind::ParseError, where + ": expected " + std::to_string(rows) + " rows");
  CMat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      fail(ErrorKind::ParseError, where + ": row " + std::to_string(i) + ": expected " +
                                      std::to_string(cols) + " entries");
    for (int k = 0; k < cols; ++k)
      m(i, k) = entry_from(row[k], where + ": row " + std::to_string(i) + ", col " + std::to_string(k));
  }
  return m;
}

AlgebraInstance instance_from(const json& j, const std::string& origin) {
  if (!j.contains("instance") || !j["instance"].is_string())
    fail(ErrorKind::ParseError, origin + ": missing \"instance\" (\"matrix\" or \"sequence\")");
  const std::string kind = j["instance"].get<std::string>();
  if (!j.contains("p") || !j["p"].is_number_integer())
    fail(ErrorKind::ParseError, origin + ": missing integer \"p\"");
  const int p = j["p"].get<int>();
  const int q = j.contains("q") ? j["q"].get<int>() : p;
  if (kind == "matrix") {
    if (p != q) fail(ErrorKind::ParseError, origin + ": matrix instance requires p == q");
    return AlgebraInstance::triangular(p);
  }
  if (kind == "sequence") return AlgebraInstance::sequence(p, q);
  fail(ErrorKind::ParseError, origin + ": unknown instance kind \"" + kind + "\"");
}

// First offending location of a membership violation, for parse errors.
void check_member_verbose(const AlgebraInstance& inst, const MatSeq& x, PartTag part, const std::string& name) {
  if (inst.kind == AlgebraKind::TriangularMatrix) {
    const CMat m = x.coeff(0);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (!mat_keeps(part, i, j) && m(i, j) != Complex(0, 0))
          fail(ErrorKind::ParseError, name + ": entry (" + std::to_string(i + 1) + "," +
                                          std::to_string(j + 1) + ") lies outside part " + part_name(part));
    return;
  }
  for (const auto& [j, m] : x.coeffs)
    if (!seq_keeps(part, j))
      fail(ErrorKind::ParseError,
           name + ": coefficient j=" + std::to_string(j) + " lies outside part " + part_name(part));
}

}  // namespace

json element_to_json(const AlgebraInstance& inst, const MatSeq& x) {
  if (inst.kind == AlgebraKind::TriangularMatrix) return matrix_json(x.coeff(0));
  json coeffs = json::array();
  for (const auto& [j, m] : x.coeffs) coeffs.push_back(json{{"j", j}, {"matrix", matrix_json(m)}});
  return coeffs;
}

MatSeq element_from_json(const AlgebraInstance& inst, const json& j, int rows, int cols,
                         const std::string& where) {
  MatSeq out(rows, cols);
  if (inst.kind == AlgebraKind::TriangularMatrix) {
    out.set_coeff(0, matrix_from(j, rows, cols, where));
    return out;
  }
  if (!j.is_array()) fail(ErrorKind::ParseError, where + ": expected a list of {j, matrix} coefficients");
  for (size_t k = 0; k < j.size(); ++k) {
    const json& c = j[k];
    if (!c.is_object() || !c.contains("j") || !c["j"].is_number_integer() || !c.contains("matrix"))
      fail(ErrorKind::ParseError, where + ": coefficient " + std::to_string(k) + ": expected {\"j\": int, \"matrix\": ...}");
    const int idx = c["j"].get<int>();
    if (out.coeffs.count(idx))
      fail(ErrorKind::ParseError, where + ": duplicate coefficient j=" + std::to_string(idx));
    out.add_coeff(idx, matrix_from(c["matrix"], rows, cols, where + ": coefficient j=" + std::to_string(idx)));
  }
  return out;
}

json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::ParseError, origin + ": " + e.what());
  }
}

DataSet parse_dataset(const std::string& text, const std::string& origin) {
  const json j = parse_json_text(text, origin);
  if (!j.is_object() || j.value("format", "") != "eginv-dataset")
    fail(ErrorKind::ParseError, origin + ": not an eginv-dataset document (missing \"format\")");
  const AlgebraInstance inst = instance_from(j, origin);

  struct Field {
    const char* name;
    SymbolRole role;
    PartTag part;
  };
  const Field fields[] = {{"alpha", SymbolRole::A, PartTag::APlus},
                          {"beta", SymbolRole::B, PartTag::BPlus},
                          {"gamma", SymbolRole::C, PartTag::CMinus},
                          {"delta", SymbolRole::D, PartTag::DMinus}};
  MatSeq parsed[4];
  for (int k = 0; k < 4; ++k) {
    if (!j.contains(fields[k].name))
      fail(ErrorKind::ParseError, origin + ": missing field \"" + fields[k].name + "\"");
    auto [r, c] = role_shape(inst, fields[k].role);
    parsed[k] = element_from_json(inst, j[fields[k].name], r, c, origin + ": " + fields[k].name);
    check_member_verbose(inst, parsed[k], fields[k].part, origin + ": " + fields[k].name);
  }
  return DataSet::make(inst, parsed[0], parsed[1], parsed[2], parsed[3]);
}

DataSet read_dataset_file(const std::string& path) { return parse_dataset(read_text_file(path), path); }

std::string format_dataset(const DataSet& data) {
  json j;
  j["format"] = "eginv-dataset";
  j["instance"] = data.inst.kind == AlgebraKind::TriangularMatrix ? "matrix" : "sequence";
  j["p"] = data.inst.p;
  j["q"] = data.inst.q;
  j["alpha"] = element_to_json(data.inst, data.alpha);
  j["beta"] = element_to_json(data.inst, data.beta);
  j["gamma"] = element_to_json(data.inst, data.gamma);
  j["delta"] = element_to_json(data.inst, data.delta);
  return j.dump(2) + "\n";
}

void write_dataset_file(const std::string& path, const DataSet& data) {
  write_text_file(path, format_dataset(data));
}

ElementFile parse_element(const std::string& text, const std::string& origin) {
  const json j = parse_json_text(text, origin);
  if (!j.is_object() || j.value("format", "") != "eginv-element")
    fail(ErrorKind::ParseError, origin + ": not an eginv-element document (missing \"format\")");
  const AlgebraInstance inst = instance_from(j, origin);
  if (!j.contains("rows") || !j.contains("cols"))
    fail(ErrorKind::ParseError, origin + ": missing \"rows\"/\"cols\"");
  const int rows = j["rows"].get<int>();
  const int cols = j["cols"].get<int>();
  if (!j.contains("value")) fail(ErrorKind::ParseError, origin + ": missing \"value\"");
  return ElementFile{inst, element_from_json(inst, j["value"], rows, cols, origin + ": value")};
}

ElementFile read_element_file(const std::string& path) { return parse_element(read_text_file(path), path); }

std::string format_element(const AlgebraInstance& inst, const MatSeq& value) {
  json j;
  j["format"] = "eginv-element";
  j["instance"] = inst.kind == AlgebraKind::TriangularMatrix ? "matrix" : "sequence";
  j["p"] = inst.p;
  j["q"] = inst.q;
  j["rows"] = value.rows;
  j["cols"] = value.cols;
  j["value"] = element_to_json(inst, value);
  return j.dump(2) + "\n";
}

void write_element_file(const std::string& path, const AlgebraInstance& inst, const MatSeq& value) {
  write_text_file(path, format_element(inst, value));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::ParseError, path + ": cannot open for writing");
  out << text;
  if (!out) fail(ErrorKind::ParseError, path + ": write failed");
}

}  // namespace eginv
