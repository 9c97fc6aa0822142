#pragma once

namespace esymdom {

inline constexpr const char* library_version = "0.1.0";

} // namespace esymdom
