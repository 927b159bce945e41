#pragma once

namespace sgt {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace sgt
