#pragma once

namespace kerlab {

/// Library version, embedded in JSON report metadata.
inline constexpr const char* version_string = "0.1.0";

}  // namespace kerlab
