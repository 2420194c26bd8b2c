#include "codesign/util/text.hpp"

#include <algorithm>

namespace codesign::text {

char32_t next_code_point(std::string_view s, std::size_t& pos) noexcept {
  const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(s[i]); };
  const unsigned char lead = byte(pos);
  int extra = 0;
  char32_t cp = 0;
  if (lead < 0x80) {
    ++pos;
    return lead;
  } else if ((lead & 0xE0) == 0xC0) {
    extra = 1;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3;
    cp = lead & 0x07;
  } else {
    ++pos;
    return 0xFFFD;
  }
  if (pos + extra >= s.size()) {
    ++pos;
    return 0xFFFD;
  }
  for (int i = 1; i <= extra; ++i) {
    if ((byte(pos + i) & 0xC0) != 0x80) {
      ++pos;
      return 0xFFFD;
    }
    cp = (cp << 6) | (byte(pos + i) & 0x3F);
  }
  pos += extra + 1;
  return cp;
}

bool is_unicode_space(char32_t cp) noexcept {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680:
    case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

namespace {

// Byte ranges [begin, end) of each whitespace-delimited run.
template <class Fn>
void for_each_run(std::string_view s, Fn&& fn) {
  std::size_t pos = 0;
  std::size_t run_start = std::string_view::npos;
  while (pos < s.size()) {
    const std::size_t at = pos;
    const char32_t cp = next_code_point(s, pos);
    if (is_unicode_space(cp)) {
      if (run_start != std::string_view::npos) {
        fn(run_start, at);
        run_start = std::string_view::npos;
      }
    } else if (run_start == std::string_view::npos) {
      run_start = at;
    }
  }
  if (run_start != std::string_view::npos) fn(run_start, s.size());
}

}  // namespace

std::string trim(std::string_view s) {
  std::size_t first = std::string_view::npos;
  std::size_t last = 0;
  for_each_run(s, [&](std::size_t b, std::size_t e) {
    if (first == std::string_view::npos) first = b;
    last = e;
  });
  if (first == std::string_view::npos) return {};
  return std::string(s.substr(first, last - first));
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  for_each_run(s, [&](std::size_t b, std::size_t e) { out.emplace_back(s.substr(b, e - b)); });
  return out;
}

std::size_t code_point_count(std::string_view s) noexcept {
  std::size_t n = 0;
  for (std::size_t pos = 0; pos < s.size(); ++n) next_code_point(s, pos);
  return n;
}

bool is_valid_utf8(std::string_view s) noexcept {
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t at = pos;
    const char32_t cp = next_code_point(s, pos);
    if (cp == 0xFFFD) {
      // A literal U+FFFD is three bytes EF BF BD; anything else is an error.
      if (pos - at != 3) return false;
    }
  }
  return true;
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c);
  });
  return out;
}

namespace {
bool is_ascii_punct(unsigned char c) {
  return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) || (c >= 0x5B && c <= 0x60) ||
         (c >= 0x7B && c <= 0x7E);
}
}  // namespace

std::string normalize_token(std::string_view token) {
  std::size_t b = 0;
  std::size_t e = token.size();
  while (b < e && is_ascii_punct(static_cast<unsigned char>(token[b]))) ++b;
  while (e > b && is_ascii_punct(static_cast<unsigned char>(token[e - 1]))) --e;
  return ascii_lower(token.substr(b, e - b));
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.append(sep);
    out.append(parts[i]);
  }
  return out;
}

}  // namespace codesign::text
