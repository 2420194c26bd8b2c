#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "codesign/scene/raster.hpp"

namespace codesign::scene {

/// Deterministic 8-bit RGB PNG (fixed compression settings, no ancillary
/// chunks), so equal rasters always encode to equal bytes.
std::vector<std::uint8_t> encode_png(const Raster& raster);

/// Decodes any PNG libpng understands into RGB, dropping alpha. Throws
/// Error(InvalidArgument) on malformed input.
Raster decode_png(std::span<const std::uint8_t> bytes);

}  // namespace codesign::scene
