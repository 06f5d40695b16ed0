#pragma once

namespace fibonom {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace fibonom
