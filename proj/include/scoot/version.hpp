#pragma once

namespace scoot {
inline constexpr const char* kToolName = "scoot";
inline constexpr const char* kToolVersion = "1.0.0";
}  // namespace scoot
