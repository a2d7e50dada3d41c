#pragma once

namespace biq {
inline constexpr const char* kToolVersion = "0.1.0";
}
