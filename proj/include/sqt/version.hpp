#pragma once

namespace sqt {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace sqt
