#pragma once

namespace bing {
inline constexpr const char* kVersion = "0.1.0";
}
