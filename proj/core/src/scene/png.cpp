#include "codesign/scene/png.hpp"

#include <png.h>

#include <cstring>
#include <string>

#include "codesign/error.hpp"

namespace codesign::scene {
namespace {

struct WriteState {
  std::vector<std::uint8_t>* out;
};

void write_bytes(png_structp png, png_bytep data, png_size_t length) {
  auto* state = static_cast<WriteState*>(png_get_io_ptr(png));
  state->out->insert(state->out->end(), data, data + length);
}

void flush_noop(png_structp) {}

struct ReadState {
  std::span<const std::uint8_t> bytes;
  std::size_t offset = 0;
};

void read_bytes(png_structp png, png_bytep data, png_size_t length) {
  auto* state = static_cast<ReadState*>(png_get_io_ptr(png));
  if (state->offset + length > state->bytes.size()) png_error(png, "truncated PNG stream");
  std::memcpy(data, state->bytes.data() + state->offset, length);
  state->offset += length;
}

void raise_error(png_structp png, png_const_charp message) {
  *static_cast<std::string*>(png_get_error_ptr(png)) = message;
  png_longjmp(png, 1);
}

void ignore_warning(png_structp, png_const_charp) {}

}  // namespace

std::vector<std::uint8_t> encode_png(const Raster& raster) {
  std::vector<std::uint8_t> out;
  std::string error;
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &error, raise_error, ignore_warning);
  if (!png) throw Error(ErrorCode::InvalidArgument, "png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info || setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw Error(ErrorCode::InvalidArgument, "PNG encoding failed: " + error);
  }

  WriteState state{&out};
  png_set_write_fn(png, &state, write_bytes, flush_noop);
  png_set_compression_level(png, 6);
  png_set_filter(png, 0, PNG_FILTER_NONE);
  png_set_IHDR(png, info, static_cast<png_uint_32>(raster.width()), static_cast<png_uint_32>(raster.height()), 8,
               PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  const auto stride = static_cast<std::size_t>(raster.width()) * 3;
  for (int y = 0; y < raster.height(); ++y) {
    auto* row = const_cast<png_bytep>(raster.pixels().data() + static_cast<std::size_t>(y) * stride);
    png_write_row(png, row);
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return out;
}

Raster decode_png(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 8 || png_sig_cmp(bytes.data(), 0, 8) != 0) {
    throw Error(ErrorCode::InvalidArgument, "not a PNG image");
  }
  std::string error;
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &error, raise_error, ignore_warning);
  if (!png) throw Error(ErrorCode::InvalidArgument, "png_create_read_struct failed");
  png_infop info = png_create_info_struct(png);
  Raster raster;
  if (!info || setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw Error(ErrorCode::InvalidArgument, "PNG decoding failed: " + error);
  }

  ReadState state{bytes, 0};
  png_set_read_fn(png, &state, read_bytes);
  png_read_info(png, info);
  png_set_expand(png);
  png_set_strip_16(png);
  png_set_strip_alpha(png);
  png_set_gray_to_rgb(png);
  png_set_interlace_handling(png);
  png_read_update_info(png, info);

  const int width = static_cast<int>(png_get_image_width(png, info));
  const int height = static_cast<int>(png_get_image_height(png, info));
  raster = Raster(width, height);
  std::vector<png_bytep> rows(static_cast<std::size_t>(height));
  const auto stride = static_cast<std::size_t>(width) * 3;
  for (int y = 0; y < height; ++y) rows[static_cast<std::size_t>(y)] = raster.pixels().data() + y * stride;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return raster;
}

}  // namespace codesign::scene
