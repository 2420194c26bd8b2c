#include "codesign/prompts/validator.hpp"

#include <algorithm>
#include <array>
#include <regex>

#include "codesign/error.hpp"
#include "codesign/util/text.hpp"

namespace codesign::prompts {
namespace {

constexpr std::array<std::string_view, 17> kStrongVerbs = {
    "Add",   "Increase", "Reduce", "Convert", "Provide",  "Prioritize", "Create", "Plant",  "Install",
    "Widen", "Separate", "Buffer", "Shade",   "Calm",     "Slow",       "Expand", "Protect",
};

bool is_ascii_punct(char c) {
  const auto u = static_cast<unsigned char>(c);
  return (u >= 0x21 && u <= 0x2F) || (u >= 0x3A && u <= 0x40) || (u >= 0x5B && u <= 0x60) || (u >= 0x7B && u <= 0x7E);
}

std::string strip_edge_punct(std::string_view token) {
  std::size_t b = 0;
  std::size_t e = token.size();
  while (b < e && is_ascii_punct(token[b])) ++b;
  while (e > b && is_ascii_punct(token[e - 1])) --e;
  return std::string(token.substr(b, e - b));
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string without_possessive(const std::string& token) {
  for (std::string_view suffix : {"'s", "\xE2\x80\x99s"}) {
    if (token.size() > suffix.size() && token.compare(token.size() - suffix.size(), suffix.size(), suffix) == 0) {
      return token.substr(0, token.size() - suffix.size());
    }
  }
  return token;
}

std::vector<std::string> normalized_tokens(std::string_view s) {
  std::vector<std::string> out;
  for (const auto& w : text::split_words(s)) {
    auto n = text::normalize_token(w);
    if (!n.empty()) out.push_back(std::move(n));
  }
  return out;
}

bool mentions_username(const std::vector<std::string>& tokens, const std::string& username) {
  const auto name = normalized_tokens(username);
  if (name.empty() || name.size() > tokens.size()) return false;
  for (std::size_t i = 0; i + name.size() <= tokens.size(); ++i) {
    bool match = true;
    for (std::size_t k = 0; k < name.size() && match; ++k) {
      const auto& tok = tokens[i + k];
      const bool last = k + 1 == name.size();
      match = tok == name[k] || (last && without_possessive(tok) == name[k]);
    }
    if (match) return true;
  }
  return false;
}

bool has_round_label(const std::vector<std::string>& tokens) {
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto& t = tokens[i];
    if (t == "round" && i + 1 < tokens.size() && all_digits(tokens[i + 1])) return true;
    if (t.size() > 5 && t.compare(0, 5, "round") == 0) {
      std::string_view rest(t);
      rest.remove_prefix(5);
      if (!rest.empty() && rest.front() == '-') rest.remove_prefix(1);
      if (all_digits(rest)) return true;
    }
  }
  return false;
}

bool looks_like_panorama_id(std::string_view token) {
  if (token.size() < 16) return false;
  bool digit = false;
  bool alpha = false;
  for (char c : token) {
    if (c >= '0' && c <= '9') {
      digit = true;
    } else if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
      alpha = true;
    } else if (c != '_' && c != '-') {
      return false;
    }
  }
  return digit && alpha;
}

bool has_metadata(std::string_view text, const std::vector<std::string>& raw_words,
                  const std::vector<std::string>& tokens, const ValidationContext& context) {
  static const std::regex coordinate(R"(-?\d{1,3}\.\d{3,})");
  static const std::regex clock_time(R"(\d{1,2}:\d{2})");
  static const std::regex iso_date(R"(\d{4}-\d{2}-\d{2})");

  for (const auto& user : context.usernames) {
    if (mentions_username(tokens, user)) return true;
  }
  if (has_round_label(tokens)) return true;
  for (const auto& pano : context.panorama_ids) {
    if (!pano.empty() && text.find(pano) != std::string_view::npos) return true;
  }
  for (const auto& word : raw_words) {
    if (std::regex_search(word, coordinate) || std::regex_search(word, clock_time) ||
        std::regex_search(word, iso_date)) {
      return true;
    }
    if (looks_like_panorama_id(strip_edge_punct(word))) return true;
  }
  return false;
}

std::size_t longest_common_run(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> cur(b.size() + 1, 0);
  std::size_t best = 0;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : 0;
      best = std::max(best, cur[j]);
    }
    std::swap(prev, cur);
  }
  return best;
}

bool copies_transcript(const std::vector<std::string>& tokens, const ValidationContext& context) {
  if (tokens.empty()) return false;
  for (const auto& message : context.source_messages) {
    const auto run = longest_common_run(tokens, normalized_tokens(message));
    if (run * kCopyDenominator >= tokens.size() * kCopyNumerator) return true;
  }
  return false;
}

}  // namespace

std::span<const std::string_view> strong_verbs() noexcept { return kStrongVerbs; }

ValidationResult validate_prompt(std::string_view text, const ValidationContext& context) {
  const auto words = text::split_words(text);
  if (words.empty()) throw Error(ErrorCode::EmptyText, "prompt text must not be blank");

  ValidationResult result;
  result.word_count = words.size();
  result.first_word = strip_edge_punct(words.front());

  const std::string verb = text::ascii_lower(result.first_word);
  auto matches = [&](std::string_view candidate) { return text::ascii_lower(candidate) == verb; };
  const bool strong = std::any_of(kStrongVerbs.begin(), kStrongVerbs.end(), matches) ||
                      std::any_of(context.extra_verbs.begin(), context.extra_verbs.end(), matches);
  if (!strong) result.violations.push_back(Violation::NoStrongVerb);

  if (result.word_count < kMinWords) result.violations.push_back(Violation::TooShort);
  if (result.word_count > kMaxWords) result.violations.push_back(Violation::TooLong);

  const auto tokens = normalized_tokens(text);
  if (has_metadata(text, words, tokens, context)) result.violations.push_back(Violation::MetadataLeak);
  if (copies_transcript(tokens, context)) result.violations.push_back(Violation::TranscriptCopy);

  result.valid = result.violations.empty();
  return result;
}

std::string dedup_key(std::string_view prompt) { return text::ascii_lower(text::join(text::split_words(prompt), " ")); }

}  // namespace codesign::prompts
