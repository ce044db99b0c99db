#pragma once

namespace tropid {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tropid
