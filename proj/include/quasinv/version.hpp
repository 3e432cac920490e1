#pragma once

#include <string_view>

namespace quasinv {

/// Artifact version; part of the report cache key.
inline constexpr std::string_view kVersion = "0.1.0";

} // namespace quasinv
