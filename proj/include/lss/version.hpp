#pragma once

namespace lss {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace lss
