#pragma once

namespace multirank {

inline constexpr const char* kToolName = "multirank";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace multirank
