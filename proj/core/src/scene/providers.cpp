#include "codesign/scene/providers.hpp"

#include <httplib.h>

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "codesign/error.hpp"
#include "codesign/scene/font.hpp"
#include "codesign/scene/png.hpp"
#include "codesign/util/digest.hpp"
#include "util/url.hpp"

namespace codesign::scene {
namespace {

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::uint8_t hex_byte(const std::string& hex, std::size_t i) {
  return static_cast<std::uint8_t>(std::stoi(hex.substr(i * 2, 2), nullptr, 16));
}

// Muted tint derived from a digest so different inputs look different.
Rgb tint(const std::string& hex, std::size_t i, int base) {
  return {static_cast<std::uint8_t>(base + hex_byte(hex, i) % 64),
          static_cast<std::uint8_t>(base + hex_byte(hex, i + 1) % 64),
          static_cast<std::uint8_t>(base + hex_byte(hex, i + 2) % 64)};
}

httplib::Client make_client(const std::string& origin, std::chrono::milliseconds timeout) {
  httplib::Client client(origin);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  return client;
}

}  // namespace

void validate_view_params(const ViewParams& view) {
  auto reject = [](const std::string& what) { throw Error(ErrorCode::InvalidViewParams, what); };
  if (view.panorama_id.empty()) reject("panorama_id must not be empty");
  if (!std::isfinite(view.heading) || view.heading < 0.0 || view.heading >= 360.0) {
    reject("heading must be in [0, 360)");
  }
  if (!std::isfinite(view.pitch) || view.pitch < -90.0 || view.pitch > 90.0) reject("pitch must be in [-90, 90]");
  if (!std::isfinite(view.fov) || view.fov <= 0.0 || view.fov > 120.0) reject("fov must be in (0, 120]");
  if (!std::isfinite(view.latitude) || view.latitude < -90.0 || view.latitude > 90.0) {
    reject("latitude must be in [-90, 90]");
  }
  if (!std::isfinite(view.longitude) || view.longitude < -180.0 || view.longitude > 180.0) {
    reject("longitude must be in [-180, 180]");
  }
}

std::vector<std::uint8_t> MockSceneProvider::fetch_scene_image(const ViewParams& view) {
  validate_view_params(view);
  const std::string label_heading = "HEADING " + fixed(view.heading, 2);
  const std::string label_pitch = "PITCH " + fixed(view.pitch, 2) + "  FOV " + fixed(view.fov, 2);
  const std::string label_coords = fixed(view.latitude, 6) + ", " + fixed(view.longitude, 6);
  const std::string hex = digest::sha256_hex(view.panorama_id);

  Raster raster(width_, height_, tint(hex, 0, 150));
  // Horizon moves with pitch; a marker column moves with heading.
  const int horizon = std::clamp(height_ / 2 + static_cast<int>(view.pitch / 90.0 * height_ / 2), 0, height_);
  raster.fill_rect(0, horizon, width_, height_ - horizon, tint(hex, 3, 70));
  const int marker = static_cast<int>(view.heading / 360.0 * width_);
  raster.fill_rect(marker, 0, 3, height_, {255, 255, 255});

  raster.blend_rect(0, 0, width_, 5 * kLineAdvance * 2 + 16, {0, 0, 0}, 160);
  const Rgb ink{255, 255, 255};
  int y = 8;
  for (const auto& line : {"PANORAMA " + view.panorama_id, label_heading, label_pitch, label_coords}) {
    draw_text(raster, 8, y, line, ink, 2);
    y += kLineAdvance * 2;
  }
  return encode_png(raster);
}

std::vector<std::uint8_t> MockImageRevisionProvider::revise(std::span<const std::uint8_t> source_png,
                                                            const std::string& prompt) {
  Raster raster;
  try {
    raster = decode_png(source_png);
  } catch (const Error& e) {
    throw Error(ErrorCode::ImageProviderError, std::string("source image unreadable: ") + e.what());
  }

  // The first paragraph is the fixed instruction; only the design lines
  // after it are drawn.
  std::vector<std::string> lines;
  const auto body_start = prompt.find('\n');
  const std::string body = body_start == std::string::npos ? prompt : prompt.substr(body_start + 1);
  const std::size_t columns = static_cast<std::size_t>(std::max(1, (raster.width() - 16) / kGlyphAdvance));
  std::size_t start = 0;
  while (start < body.size()) {
    auto end = body.find('\n', start);
    if (end == std::string::npos) end = body.size();
    for (auto& wrapped : wrap_text(std::string_view(body).substr(start, end - start), columns)) {
      lines.push_back(std::move(wrapped));
    }
    start = end + 1;
  }

  const std::string hex = digest::sha256_hex(prompt);
  const int panel_height = std::min(raster.height() / 2, static_cast<int>(lines.size()) * kLineAdvance + 16);
  const int panel_top = raster.height() - panel_height;
  raster.blend_rect(0, panel_top, raster.width(), panel_height, tint(hex, 0, 20), 200);
  raster.fill_rect(0, panel_top, raster.width(), 2, tint(hex, 3, 180));
  int y = panel_top + 8;
  for (const auto& line : lines) {
    if (y + kGlyphHeight > raster.height()) break;
    draw_text(raster, 8, y, line, {255, 255, 255});
    y += kLineAdvance;
  }
  return encode_png(raster);
}

HttpSceneProvider::HttpSceneProvider(std::string endpoint, std::string api_key, int width, int height,
                                     std::chrono::milliseconds timeout)
    : endpoint_(std::move(endpoint)), api_key_(std::move(api_key)), width_(width), height_(height),
      timeout_(timeout) {}

std::vector<std::uint8_t> HttpSceneProvider::fetch_scene_image(const ViewParams& view) {
  validate_view_params(view);
  if (api_key_.empty()) throw Error(ErrorCode::SceneProviderError, "scene provider has no credential");
  const auto url = detail::split_url(endpoint_);
  auto client = make_client(url.origin, timeout_);
  if (!client.is_valid()) throw Error(ErrorCode::SceneProviderError, "unsupported scene endpoint " + endpoint_);
  const httplib::Params params{
      {"pano", view.panorama_id},
      {"heading", fixed(view.heading, 4)},
      {"pitch", fixed(view.pitch, 4)},
      {"fov", fixed(view.fov, 4)},
      {"location", fixed(view.latitude, 7) + "," + fixed(view.longitude, 7)},
      {"size", std::to_string(width_) + "x" + std::to_string(height_)},
      {"key", api_key_},
  };
  auto res = client.Get(url.path, params, httplib::Headers{});
  if (!res) {
    throw Error(ErrorCode::SceneProviderError, "scene endpoint unreachable: " + httplib::to_string(res.error()));
  }
  if (res->status / 100 != 2) {
    throw Error(ErrorCode::SceneProviderError, "scene endpoint returned HTTP " + std::to_string(res->status));
  }
  if (res->body.empty()) throw Error(ErrorCode::SceneProviderError, "scene endpoint returned no image");
  return {res->body.begin(), res->body.end()};
}

HttpImageRevisionProvider::HttpImageRevisionProvider(std::string endpoint, std::string api_key,
                                                     std::chrono::milliseconds timeout)
    : endpoint_(std::move(endpoint)), api_key_(std::move(api_key)), timeout_(timeout) {}

std::vector<std::uint8_t> HttpImageRevisionProvider::revise(std::span<const std::uint8_t> source_png,
                                                            const std::string& prompt) {
  if (api_key_.empty()) throw Error(ErrorCode::ImageProviderError, "image provider has no credential");
  const auto url = detail::split_url(endpoint_);
  auto client = make_client(url.origin, timeout_);
  if (!client.is_valid()) throw Error(ErrorCode::ImageProviderError, "unsupported image endpoint " + endpoint_);
  client.set_bearer_token_auth(api_key_);
  const httplib::MultipartFormDataItems items{
      {"image", std::string(source_png.begin(), source_png.end()), "source.png", "image/png"},
      {"prompt", prompt, "", ""},
  };
  auto res = client.Post(url.path, items);
  if (!res) {
    throw Error(ErrorCode::ImageProviderError, "image endpoint unreachable: " + httplib::to_string(res.error()));
  }
  if (res->status / 100 != 2) {
    throw Error(ErrorCode::ImageProviderError, "image endpoint returned HTTP " + std::to_string(res->status));
  }
  if (res->body.empty()) throw Error(ErrorCode::ImageProviderError, "image endpoint returned no image");
  return {res->body.begin(), res->body.end()};
}

}  // namespace codesign::scene
