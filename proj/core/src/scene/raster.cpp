#include "codesign/scene/raster.hpp"

#include <algorithm>

#include "codesign/error.hpp"

namespace codesign::scene {

Raster::Raster(int width, int height, Rgb fill) : width_(width), height_(height) {
  if (width <= 0 || height <= 0) throw Error(ErrorCode::InvalidArgument, "raster dimensions must be positive");
  pixels_.resize(static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * 3);
  for (std::size_t i = 0; i < pixels_.size(); i += 3) {
    pixels_[i] = fill.r;
    pixels_[i + 1] = fill.g;
    pixels_[i + 2] = fill.b;
  }
}

Rgb Raster::at(int x, int y) const {
  const auto i = (static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x)) * 3;
  return {pixels_.at(i), pixels_.at(i + 1), pixels_.at(i + 2)};
}

void Raster::set(int x, int y, Rgb color) {
  if (x < 0 || y < 0 || x >= width_ || y >= height_) return;
  const auto i = (static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x)) * 3;
  pixels_[i] = color.r;
  pixels_[i + 1] = color.g;
  pixels_[i + 2] = color.b;
}

void Raster::fill_rect(int x, int y, int w, int h, Rgb color) {
  const int x1 = std::min(x + w, width_);
  const int y1 = std::min(y + h, height_);
  for (int yy = std::max(y, 0); yy < y1; ++yy) {
    for (int xx = std::max(x, 0); xx < x1; ++xx) set(xx, yy, color);
  }
}

void Raster::blend_rect(int x, int y, int w, int h, Rgb color, std::uint8_t alpha) {
  auto mix = [alpha](std::uint8_t under, std::uint8_t over) {
    return static_cast<std::uint8_t>((under * (255 - alpha) + over * alpha + 127) / 255);
  };
  const int x1 = std::min(x + w, width_);
  const int y1 = std::min(y + h, height_);
  for (int yy = std::max(y, 0); yy < y1; ++yy) {
    for (int xx = std::max(x, 0); xx < x1; ++xx) {
      const Rgb under = at(xx, yy);
      set(xx, yy, {mix(under.r, color.r), mix(under.g, color.g), mix(under.b, color.b)});
    }
  }
}

}  // namespace codesign::scene
