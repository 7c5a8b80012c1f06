#pragma once

namespace ulrichk3 {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ulrichk3
