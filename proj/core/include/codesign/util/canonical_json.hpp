#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace codesign {

/// Canonical encoding: sorted keys, UTF-8 passthrough, no insignificant
/// whitespace. nlohmann's default object type is ordered by key, so a plain
/// compact dump already satisfies this.
inline std::string canonical_dump(const nlohmann::json& value) {
  return value.dump(-1, ' ', false, nlohmann::json::error_handler_t::strict);
}

}  // namespace codesign
