#pragma once

namespace szeta {

inline constexpr const char* kVersion = "szeta 1.0.0";

}  // namespace szeta
