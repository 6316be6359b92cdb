#pragma once

namespace copack {

inline constexpr const char* kToolVersion = "copack 0.1.0";

}  // namespace copack
