#pragma once

#include <string_view>

namespace h2cost {

inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace h2cost
