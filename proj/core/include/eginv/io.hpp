#pragma once

#include <string>

#include "eginv/dataset.hpp"

namespace eginv {

// Self-describing JSON documents; complex entries are [re, im] pairs so the
// fixtures stay auditable by eye. Field names are documented in
// docs/FORMATS.md. Parsing validates shapes and part membership and reports
// the offending entry's location.

DataSet parse_dataset(const std::string& text, const std::string& origin = "<memory>");
DataSet read_dataset_file(const std::string& path);
std::string format_dataset(const DataSet& data);
void write_dataset_file(const std::string& path, const DataSet& data);

struct ElementFile {
  AlgebraInstance inst;
  MatSeq value;
};

ElementFile parse_element(const std::string& text, const std::string& origin = "<memory>");
ElementFile read_element_file(const std::string& path);
std::string format_element(const AlgebraInstance& inst, const MatSeq& value);
void write_element_file(const std::string& path, const AlgebraInstance& inst, const MatSeq& value);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace eginv
