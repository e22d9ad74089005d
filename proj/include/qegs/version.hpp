#pragma once

namespace qegs {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace qegs
