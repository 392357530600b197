#pragma once

namespace prab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace prab
