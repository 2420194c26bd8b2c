#include "codesign/exporter/export_bundle.hpp"

#include "codesign/error.hpp"
#include "codesign/exporter/zip.hpp"
#include "codesign/session/room_repository.hpp"
#include "codesign/util/canonical_json.hpp"

namespace codesign::exporter {
namespace {

constexpr std::string_view kManifest = "manifest.json";
constexpr std::string_view kTranscript = "transcript.jsonl";
constexpr std::string_view kPrompts = "prompts.json";
constexpr std::string_view kImagePrefix = "images/";
constexpr std::string_view kImageSuffix = ".png";

std::vector<std::uint8_t> bytes_of(const std::string& s) { return {s.begin(), s.end()}; }

std::string image_entry(const std::string& artifact_id) {
  return std::string(kImagePrefix) + artifact_id + std::string(kImageSuffix);
}

nlohmann::json parse_json(const std::vector<std::uint8_t>& data, std::string_view entry) {
  auto j = nlohmann::json::parse(data.begin(), data.end(), nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::InvalidArgument, "archive entry " + std::string(entry) + " is not JSON");
  return j;
}

}  // namespace

void to_json(nlohmann::json& j, const ExportManifest& m) {
  j = {{"room_id", m.room_id},
       {"participants", m.participants},
       {"agent_roster", m.agent_roster},
       {"status", m.status},
       {"current_round", m.current_round},
       {"message_count", m.message_count},
       {"created_at_ms", m.created_at_ms},
       {"started_at_ms", m.started_at_ms ? nlohmann::json(*m.started_at_ms) : nlohmann::json(nullptr)},
       {"ended_at_ms", m.ended_at_ms ? nlohmann::json(*m.ended_at_ms) : nlohmann::json(nullptr)},
       {"snapshots", m.snapshots},
       {"artifacts", m.artifacts}};
}

void from_json(const nlohmann::json& j, ExportManifest& m) {
  j.at("room_id").get_to(m.room_id);
  j.at("participants").get_to(m.participants);
  j.at("agent_roster").get_to(m.agent_roster);
  j.at("status").get_to(m.status);
  j.at("current_round").get_to(m.current_round);
  j.at("message_count").get_to(m.message_count);
  j.at("created_at_ms").get_to(m.created_at_ms);
  m.started_at_ms = j.at("started_at_ms").is_null() ? std::nullopt
                                                    : std::optional<TimestampMs>(j.at("started_at_ms").get<TimestampMs>());
  m.ended_at_ms = j.at("ended_at_ms").is_null() ? std::nullopt
                                                : std::optional<TimestampMs>(j.at("ended_at_ms").get<TimestampMs>());
  j.at("snapshots").get_to(m.snapshots);
  j.at("artifacts").get_to(m.artifacts);
}

ExportBundle export_session(const store::DocumentStore& store, const std::string& room_id) {
  const RoomDocument room = session::get_room(store, room_id);

  ExportBundle bundle;
  auto& m = bundle.manifest;
  m.room_id = room.room_id;
  m.participants = room.participants;
  m.agent_roster = room.agent_roster;
  m.status = room.status;
  m.current_round = room.current_round;
  m.created_at_ms = room.created_at_ms;
  m.started_at_ms = room.started_at_ms;
  m.ended_at_ms = room.ended_at_ms;

  bundle.transcript = session::read_messages(store, room_id, 0, room.next_seq);
  m.message_count = static_cast<std::int64_t>(bundle.transcript.size());
  if (m.message_count != room.next_seq) {
    throw Error(ErrorCode::StorageError, "room '" + room_id + "' log has gaps below seq " +
                                             std::to_string(room.next_seq));
  }

  for (const auto& id : room.scene_refs) {
    auto snapshot = session::find_snapshot(store, id);
    if (!snapshot) throw Error(ErrorCode::StorageError, "snapshot '" + id + "' missing");
    m.snapshots.push_back(std::move(*snapshot));
  }
  for (const auto& id : room.artifact_refs) {
    auto artifact = session::find_artifact(store, id);
    if (!artifact) throw Error(ErrorCode::StorageError, "artifact '" + id + "' metadata missing");
    auto bytes = store.get_blob(artifact->bytes_ref);
    if (!bytes) throw Error(ErrorCode::StorageError, "image bytes of '" + id + "' missing");
    bundle.images.emplace(id, std::move(*bytes));
    m.artifacts.push_back(std::move(*artifact));
  }
  for (const auto& id : room.prompt_set_refs) {
    auto record = store.get(session::prompt_set_key(id));
    if (!record) throw Error(ErrorCode::StorageError, "prompt set '" + id + "' missing");
    bundle.prompt_sets.push_back(record->value.get<PromptSet>());
  }
  return bundle;
}

std::vector<std::uint8_t> serialize_bundle(const ExportBundle& bundle) {
  std::vector<ZipEntry> entries;
  entries.push_back({std::string(kManifest), bytes_of(canonical_dump(bundle.manifest))});

  std::string transcript;
  for (const auto& message : bundle.transcript) {
    transcript += canonical_dump(message);
    transcript += '\n';
  }
  entries.push_back({std::string(kTranscript), bytes_of(transcript)});
  entries.push_back({std::string(kPrompts), bytes_of(canonical_dump(bundle.prompt_sets))});

  for (const auto& artifact : bundle.manifest.artifacts) {
    auto it = bundle.images.find(artifact.artifact_id);
    if (it == bundle.images.end()) {
      throw Error(ErrorCode::InvalidArgument, "bundle lacks image bytes for '" + artifact.artifact_id + "'");
    }
    entries.push_back({image_entry(artifact.artifact_id), it->second});
  }
  return write_zip(entries);
}

ExportBundle parse_bundle(std::span<const std::uint8_t> archive) {
  const auto entries = read_zip(archive);
  auto expect = [&](std::size_t i, std::string_view name) -> const ZipEntry& {
    if (i >= entries.size() || entries[i].name != name) {
      throw Error(ErrorCode::InvalidArgument, "archive entry " + std::to_string(i) + " should be " + std::string(name));
    }
    return entries[i];
  };

  ExportBundle bundle;
  bundle.manifest = parse_json(expect(0, kManifest).data, kManifest).get<ExportManifest>();

  const auto& transcript = expect(1, kTranscript).data;
  std::size_t start = 0;
  for (std::size_t i = 0; i < transcript.size(); ++i) {
    if (transcript[i] != '\n') continue;
    auto line = nlohmann::json::parse(transcript.begin() + static_cast<std::ptrdiff_t>(start),
                                      transcript.begin() + static_cast<std::ptrdiff_t>(i), nullptr, false);
    if (line.is_discarded()) throw Error(ErrorCode::InvalidArgument, "transcript line is not JSON");
    bundle.transcript.push_back(line.get<ChatMessage>());
    start = i + 1;
  }
  if (start != transcript.size()) throw Error(ErrorCode::InvalidArgument, "transcript lacks a final newline");

  bundle.prompt_sets = parse_json(expect(2, kPrompts).data, kPrompts).get<std::vector<PromptSet>>();

  std::size_t index = 3;
  for (const auto& artifact : bundle.manifest.artifacts) {
    bundle.images.emplace(artifact.artifact_id, expect(index++, image_entry(artifact.artifact_id)).data);
  }
  if (index != entries.size()) throw Error(ErrorCode::InvalidArgument, "archive has unexpected trailing entries");
  return bundle;
}

}  // namespace codesign::exporter
