#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "codesign/model/prompt_set.hpp"

namespace codesign::prompts {

/// The closed list of allowed leading verbs.
std::span<const std::string_view> strong_verbs() noexcept;

/// Room facts a prompt must not leak, plus the transcript it must not copy.
struct ValidationContext {
  std::vector<std::string> usernames;
  std::vector<std::string> panorama_ids;
  std::vector<std::string> source_messages;  // empty: skip the copy check
  std::vector<std::string> extra_verbs;      // operator extension of the whitelist
};

struct ValidationResult {
  bool valid = false;
  std::size_t word_count = 0;
  std::string first_word;
  std::vector<Violation> violations;  // in check order; empty iff valid
};

inline constexpr std::size_t kMinWords = 6;
inline constexpr std::size_t kMaxWords = 14;
/// Share of a prompt's tokens that may appear as one contiguous run in a
/// single source message before it counts as copied (70%).
inline constexpr std::size_t kCopyNumerator = 7;
inline constexpr std::size_t kCopyDenominator = 10;

/// Checks, in order: leading verb, 6..14 whitespace-delimited words, no
/// room metadata (usernames, round labels, coordinates, panorama ids,
/// clock times or dates), no transcript copy. Throws EmptyText for blank
/// input.
ValidationResult validate_prompt(std::string_view text, const ValidationContext& context = {});

/// Case- and whitespace-insensitive identity used for de-duplication.
std::string dedup_key(std::string_view prompt);

}  // namespace codesign::prompts
