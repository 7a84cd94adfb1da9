#pragma once

namespace weakqc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace weakqc
