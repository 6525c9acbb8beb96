#pragma once

namespace fwis {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fwis
