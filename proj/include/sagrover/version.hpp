#pragma once

namespace sagrover {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace sagrover
