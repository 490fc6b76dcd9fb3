#pragma once

namespace eginv {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace eginv
