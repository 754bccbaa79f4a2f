#pragma once

namespace anthill {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace anthill
