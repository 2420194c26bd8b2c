#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace codesign::text {

/// Decodes one UTF-8 code point starting at `pos`, advancing `pos`.
/// Malformed bytes decode as U+FFFD and consume one byte.
char32_t next_code_point(std::string_view s, std::size_t& pos) noexcept;

bool is_unicode_space(char32_t cp) noexcept;

/// Strips leading and trailing Unicode whitespace.
std::string trim(std::string_view s);

/// Splits on runs of Unicode whitespace; no empty tokens.
std::vector<std::string> split_words(std::string_view s);

std::size_t code_point_count(std::string_view s) noexcept;

bool is_valid_utf8(std::string_view s) noexcept;

/// ASCII-only lowercase; non-ASCII bytes pass through unchanged.
std::string ascii_lower(std::string_view s);

/// Lowercases and strips leading/trailing ASCII punctuation, for token
/// comparisons that should ignore "corridor," vs "corridor".
std::string normalize_token(std::string_view token);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace codesign::text
