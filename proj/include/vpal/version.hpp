#pragma once

#include <string_view>

namespace vpal {

inline constexpr std::string_view kToolVersion = "1.0.0";

}  // namespace vpal
