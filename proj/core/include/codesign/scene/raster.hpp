#pragma once

#include <cstdint>
#include <vector>

namespace codesign::scene {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// 8-bit RGB image, row-major, no padding.
class Raster {
 public:
  Raster() = default;
  Raster(int width, int height, Rgb fill = {});

  int width() const { return width_; }
  int height() const { return height_; }

  Rgb at(int x, int y) const;
  void set(int x, int y, Rgb color);  // ignores out-of-bounds writes

  void fill_rect(int x, int y, int w, int h, Rgb color);
  /// Mixes `color` over the rectangle with weight alpha/255.
  void blend_rect(int x, int y, int w, int h, Rgb color, std::uint8_t alpha);

  const std::vector<std::uint8_t>& pixels() const { return pixels_; }
  std::vector<std::uint8_t>& pixels() { return pixels_; }

  friend bool operator==(const Raster&, const Raster&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

}  // namespace codesign::scene
