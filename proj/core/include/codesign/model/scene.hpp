#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "codesign/clock.hpp"

namespace codesign {

/// Camera pose of a street-level panorama view.
struct ViewParams {
  std::string panorama_id;
  double heading = 0.0;  // [0, 360)
  double pitch = 0.0;    // [-90, 90]
  double fov = 90.0;     // (0, 120]
  double latitude = 0.0;
  double longitude = 0.0;

  friend bool operator==(const ViewParams&, const ViewParams&) = default;
};

struct SceneSnapshot {
  std::string snapshot_id;
  std::string room_id;
  ViewParams view;
  std::string image_ref;  // artifact id of the SourceScene image
  int saved_round = 1;
  TimestampMs created_at_ms = 0;

  friend bool operator==(const SceneSnapshot&, const SceneSnapshot&) = default;
};

enum class ArtifactKind { SourceScene, RevisedDesign };

NLOHMANN_JSON_SERIALIZE_ENUM(ArtifactKind, {
    {ArtifactKind::SourceScene, "SourceScene"},
    {ArtifactKind::RevisedDesign, "RevisedDesign"},
})

/// A stored image. Source scenes carry generation_index 0; every revision
/// is its parent's index plus one, so the first revision of a snapshot is
/// generation 1.
struct ImageArtifact {
  std::string artifact_id;
  std::string room_id;
  ArtifactKind kind = ArtifactKind::SourceScene;
  std::optional<std::string> source_snapshot;
  std::optional<std::string> parent_artifact;
  std::optional<std::string> prompt_set;
  std::string bytes_ref;  // blob key
  std::string content_hash;
  int created_round = 1;
  int generation_index = 0;
  std::int64_t event_seq = 0;  // seq of the chat message announcing it
  TimestampMs created_at_ms = 0;

  friend bool operator==(const ImageArtifact&, const ImageArtifact&) = default;
};

void to_json(nlohmann::json& j, const ViewParams& v);
void from_json(const nlohmann::json& j, ViewParams& v);
void to_json(nlohmann::json& j, const SceneSnapshot& s);
void from_json(const nlohmann::json& j, SceneSnapshot& s);
void to_json(nlohmann::json& j, const ImageArtifact& a);
void from_json(const nlohmann::json& j, ImageArtifact& a);

}  // namespace codesign
