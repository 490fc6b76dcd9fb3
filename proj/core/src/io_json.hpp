#pragma once

// Internal JSON helpers shared by io.cpp and commands.cpp. Not installed API
// surface: requires the vendored nlohmann header on the include path.

#include <json.hpp>

#include "eginv/dataset.hpp"

namespace eginv {

nlohmann::json element_to_json(const AlgebraInstance& inst, const MatSeq& x);
MatSeq element_from_json(const AlgebraInstance& inst, const nlohmann::json& j, int rows, int cols,
                         const std::string& where);
nlohmann::json parse_json_text(const std::string& text, const std::string& origin);

}  // namespace eginv
