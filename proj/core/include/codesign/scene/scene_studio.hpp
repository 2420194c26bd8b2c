#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "codesign/model/prompt_set.hpp"
#include "codesign/model/scene.hpp"
#include "codesign/scene/providers.hpp"
#include "codesign/session/session_service.hpp"

namespace codesign::scene {

/// Text sent to the revision provider: the pinned instruction followed by
/// one numbered line per prompt item, in order.
std::string revision_request_text(std::span<const PromptItem> items);

/// Snapshots and image revisions of a room. Artifacts are append-only:
/// blobs are written under a reserved id before the metadata and the
/// announcing chat message commit together.
class SceneStudio {
 public:
  SceneStudio(session::SessionService& sessions, SceneProvider& scenes, ImageRevisionProvider& revisions);

  SceneSnapshot save_snapshot(const std::string& room_id, std::string_view username, const ViewParams& view);

  /// `source_id` may name an artifact or a snapshot; without it the most
  /// recent artifact of the room is revised.
  ImageArtifact revise_image(const std::string& room_id, std::string_view username, const std::string& prompt_set_id,
                             const std::optional<std::string>& source_id = std::nullopt);

  std::vector<ImageArtifact> list_artifacts(const std::string& room_id) const;
  std::vector<SceneSnapshot> list_snapshots(const std::string& room_id) const;
  ImageArtifact artifact(const std::string& artifact_id) const;
  std::vector<std::uint8_t> artifact_bytes(const std::string& artifact_id) const;

 private:
  struct Reservation {
    std::string snapshot_id;
    std::string artifact_id;
  };
  Reservation reserve(const std::string& room_id, std::string_view username, bool with_snapshot);

  session::SessionService& sessions_;
  SceneProvider& scenes_;
  ImageRevisionProvider& revisions_;
};

}  // namespace codesign::scene
