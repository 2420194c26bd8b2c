#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "codesign/scene/raster.hpp"

namespace codesign::scene {

inline constexpr int kGlyphWidth = 5;
inline constexpr int kGlyphHeight = 8;  // 7 rows plus a descender row
inline constexpr int kGlyphAdvance = 6;  // glyph plus one column of spacing
inline constexpr int kLineAdvance = 10;

/// Draws printable ASCII with a 5x7 column bitmap font scaled by `scale`.
/// Anything outside 0x20..0x7E is drawn as '?', one glyph per code point.
void draw_text(Raster& raster, int x, int y, std::string_view text, Rgb color, int scale = 1);

int text_width(std::string_view text, int scale = 1);

/// Greedy word wrap to at most `max_columns` glyphs per line; longer words
/// are hard-split.
std::vector<std::string> wrap_text(std::string_view text, std::size_t max_columns);

}  // namespace codesign::scene
