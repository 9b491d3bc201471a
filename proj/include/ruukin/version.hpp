#pragma once

namespace ruukin {

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace ruukin
