#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "codesign/model/scene.hpp"

namespace codesign::scene {

/// Range checks shared by every entry point that accepts a camera pose.
/// Throws Error(InvalidViewParams).
void validate_view_params(const ViewParams& view);

/// Street-level imagery source. Throws Error(SceneProviderError).
class SceneProvider {
 public:
  virtual ~SceneProvider() = default;
  virtual std::vector<std::uint8_t> fetch_scene_image(const ViewParams& view) = 0;
};

/// Prompt-conditioned image editing. Throws Error(ImageProviderError).
class ImageRevisionProvider {
 public:
  virtual ~ImageRevisionProvider() = default;
  virtual std::vector<std::uint8_t> revise(std::span<const std::uint8_t> source_png, const std::string& prompt) = 0;
};

/// Flat placeholder scene labeled with the pose, a pure function of it.
class MockSceneProvider final : public SceneProvider {
 public:
  explicit MockSceneProvider(int width = 640, int height = 640) : width_(width), height_(height) {}
  std::vector<std::uint8_t> fetch_scene_image(const ViewParams& view) override;

 private:
  int width_;
  int height_;
};

/// Composites the request text onto the source in a fixed panel layout.
class MockImageRevisionProvider final : public ImageRevisionProvider {
 public:
  std::vector<std::uint8_t> revise(std::span<const std::uint8_t> source_png, const std::string& prompt) override;
};

/// Static street-imagery HTTP endpoint. Issues
/// GET <endpoint>?pano=<id>&heading=&pitch=&fov=&location=<lat>,<lon>&size=WxH&key=<key>
/// and expects image bytes back.
class HttpSceneProvider final : public SceneProvider {
 public:
  HttpSceneProvider(std::string endpoint, std::string api_key, int width = 640, int height = 640,
                    std::chrono::milliseconds timeout = std::chrono::seconds(30));
  std::vector<std::uint8_t> fetch_scene_image(const ViewParams& view) override;

 private:
  std::string endpoint_;
  std::string api_key_;
  int width_;
  int height_;
  std::chrono::milliseconds timeout_;
};

/// Image-edit HTTP endpoint. POSTs multipart form data with fields
/// "image" (PNG) and "prompt", bearer-authenticated, and expects PNG bytes.
class HttpImageRevisionProvider final : public ImageRevisionProvider {
 public:
  HttpImageRevisionProvider(std::string endpoint, std::string api_key,
                            std::chrono::milliseconds timeout = std::chrono::seconds(120));
  std::vector<std::uint8_t> revise(std::span<const std::uint8_t> source_png, const std::string& prompt) override;

 private:
  std::string endpoint_;
  std::string api_key_;
  std::chrono::milliseconds timeout_;
};

}  // namespace codesign::scene
