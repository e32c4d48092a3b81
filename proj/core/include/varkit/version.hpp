#pragma once

namespace varkit {

inline constexpr const char* kVersion = "varkit 0.1.0";

}  // namespace varkit
