#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace codesign::digest {

/// Lowercase hex SHA-256.
std::string sha256_hex(std::span<const std::uint8_t> bytes);
std::string sha256_hex(std::string_view text);

/// "sha256:<hex>", the form recorded on artifacts.
std::string content_hash(std::span<const std::uint8_t> bytes);

}  // namespace codesign::digest
