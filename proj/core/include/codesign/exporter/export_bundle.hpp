#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "codesign/model/message.hpp"
#include "codesign/model/prompt_set.hpp"
#include "codesign/model/room.hpp"
#include "codesign/model/scene.hpp"
#include "codesign/store/document_store.hpp"

namespace codesign::exporter {

struct ExportManifest {
  std::string room_id;
  std::vector<Username> participants;
  std::vector<AgentActivation> agent_roster;
  RoomStatus status = RoomStatus::Lobby;
  int current_round = 1;
  std::int64_t message_count = 0;
  TimestampMs created_at_ms = 0;
  std::optional<TimestampMs> started_at_ms;
  std::optional<TimestampMs> ended_at_ms;
  std::vector<SceneSnapshot> snapshots;
  std::vector<ImageArtifact> artifacts;  // creation order

  friend bool operator==(const ExportManifest&, const ExportManifest&) = default;
};

/// Everything downloadable for one room.
///
/// Archive layout (stored ZIP, entries in this order):
///   manifest.json        ExportManifest
///   transcript.jsonl     one message per line, seq order
///   prompts.json         array of prompt sets
///   images/<id>.png      one per artifact, manifest order
/// All JSON is canonical (sorted keys, no insignificant whitespace).
struct ExportBundle {
  ExportManifest manifest;
  std::vector<ChatMessage> transcript;
  std::vector<PromptSet> prompt_sets;
  std::map<std::string, std::vector<std::uint8_t>> images;  // artifact_id -> PNG

  friend bool operator==(const ExportBundle&, const ExportBundle&) = default;
};

/// Reads the room document once and assembles everything it references,
/// with the log cut at its next_seq. Takes no locks. Throws UnknownRoom.
ExportBundle export_session(const store::DocumentStore& store, const std::string& room_id);

std::vector<std::uint8_t> serialize_bundle(const ExportBundle& bundle);

/// Inverse of serialize_bundle; re-serializing the result reproduces the
/// input bytes. Throws Error(InvalidArgument) on malformed archives.
ExportBundle parse_bundle(std::span<const std::uint8_t> archive);

void to_json(nlohmann::json& j, const ExportManifest& m);
void from_json(const nlohmann::json& j, ExportManifest& m);

}  // namespace codesign::exporter
