#include "codesign/scene/scene_studio.hpp"

#include "codesign/agents/agent_config.hpp"
#include "codesign/error.hpp"
#include "codesign/session/room_repository.hpp"
#include "codesign/util/digest.hpp"

namespace codesign::scene {
namespace {

void require_member(const RoomDocument& room, const Username& name) {
  if (room.status != RoomStatus::Active) {
    throw Error(ErrorCode::RoomNotActive, "room '" + room.room_id + "' is not Active");
  }
  if (!room.has_participant(name)) {
    throw Error(ErrorCode::UnknownUser, "'" + name + "' is not a participant of room '" + room.room_id + "'");
  }
}

ChatMessage announcement(std::string content, TimestampMs now, int round, Attachment attachment) {
  ChatMessage m;
  m.author = "System";
  m.role = MessageRole::System;
  m.content = std::move(content);
  m.timestamp_ms = now;
  m.round_index = round;
  m.attachment = std::move(attachment);
  return m;
}

}  // namespace

std::string revision_request_text(std::span<const PromptItem> items) {
  std::string out(agents::revision_instruction());
  for (std::size_t i = 0; i < items.size(); ++i) {
    out += '\n';
    out += std::to_string(i + 1);
    out += ". ";
    out += items[i].text;
  }
  return out;
}

SceneStudio::SceneStudio(session::SessionService& sessions, SceneProvider& scenes, ImageRevisionProvider& revisions)
    : sessions_(sessions), scenes_(scenes), revisions_(revisions) {}

SceneStudio::Reservation SceneStudio::reserve(const std::string& room_id, std::string_view username,
                                              bool with_snapshot) {
  const Username name = session::normalize_username(username, sessions_.limits().max_username_length);
  return store::run_transaction(
      sessions_.store(),
      [&](store::Transaction& tx) {
        RoomDocument room = session::load_room(tx, room_id);
        require_member(room, name);
        Reservation r;
        r.artifact_id = room_id + "-art-" + std::to_string(++room.artifact_counter);
        if (with_snapshot) r.snapshot_id = room_id + "-snap-" + std::to_string(++room.snapshot_counter);
        session::save_room(tx, room);
        return r;
      },
      sessions_.retry_policy());
}

SceneSnapshot SceneStudio::save_snapshot(const std::string& room_id, std::string_view username,
                                         const ViewParams& view) {
  validate_view_params(view);
  const Username name = session::normalize_username(username, sessions_.limits().max_username_length);
  require_member(sessions_.room(room_id), name);

  const std::vector<std::uint8_t> bytes = scenes_.fetch_scene_image(view);
  if (bytes.empty()) throw Error(ErrorCode::SceneProviderError, "scene provider returned no image");
  const Reservation ids = reserve(room_id, name, true);
  sessions_.store().put_blob(session::artifact_blob_key(ids.artifact_id), bytes);
  const std::string hash = digest::content_hash(bytes);

  return store::run_transaction(
      sessions_.store(),
      [&](store::Transaction& tx) {
        RoomDocument room = session::load_room(tx, room_id);
        require_member(room, name);
        const TimestampMs now = sessions_.clock().now_ms();

        ChatMessage notice = announcement(name + " saved a street view snapshot.", now, room.current_round,
                                          Attachment{"snapshot", ids.snapshot_id});
        const ChatMessage& stored = session::append_message(tx, room, notice);

        ImageArtifact artifact;
        artifact.artifact_id = ids.artifact_id;
        artifact.room_id = room_id;
        artifact.kind = ArtifactKind::SourceScene;
        artifact.source_snapshot = ids.snapshot_id;
        artifact.bytes_ref = session::artifact_blob_key(ids.artifact_id);
        artifact.content_hash = hash;
        artifact.created_round = room.current_round;
        artifact.generation_index = 0;
        artifact.event_seq = stored.seq;
        artifact.created_at_ms = now;

        SceneSnapshot snapshot;
        snapshot.snapshot_id = ids.snapshot_id;
        snapshot.room_id = room_id;
        snapshot.view = view;
        snapshot.image_ref = ids.artifact_id;
        snapshot.saved_round = room.current_round;
        snapshot.created_at_ms = now;

        room.scene_refs.push_back(snapshot.snapshot_id);
        room.artifact_refs.push_back(artifact.artifact_id);
        tx.create(session::snapshot_key(snapshot.snapshot_id), snapshot);
        tx.create(session::artifact_meta_key(artifact.artifact_id), artifact);
        session::save_room(tx, room);
        return snapshot;
      },
      sessions_.retry_policy());
}

ImageArtifact SceneStudio::revise_image(const std::string& room_id, std::string_view username,
                                        const std::string& prompt_set_id,
                                        const std::optional<std::string>& source_id) {
  const Username name = session::normalize_username(username, sessions_.limits().max_username_length);
  const RoomDocument room = sessions_.room(room_id);
  require_member(room, name);

  auto prompt_record = sessions_.store().get(session::prompt_set_key(prompt_set_id));
  if (!prompt_record) throw Error(ErrorCode::UnknownPromptSet, "prompt set '" + prompt_set_id + "' does not exist");
  const auto prompt_set = prompt_record->value.get<PromptSet>();
  if (prompt_set.room_id != room_id) {
    throw Error(ErrorCode::UnknownPromptSet, "prompt set '" + prompt_set_id + "' belongs to another room");
  }
  if (prompt_set.items.empty()) throw Error(ErrorCode::EmptyPromptSet, "prompt set '" + prompt_set_id + "' is empty");

  std::optional<ImageArtifact> parent;
  if (source_id) {
    parent = session::find_artifact(sessions_.store(), *source_id);
    if (!parent) {
      if (auto snapshot = session::find_snapshot(sessions_.store(), *source_id)) {
        parent = session::find_artifact(sessions_.store(), snapshot->image_ref);
      }
    }
    if (!parent || parent->room_id != room_id) {
      throw Error(ErrorCode::UnknownArtifact, "no artifact or snapshot '" + *source_id + "' in room '" + room_id + "'");
    }
  } else {
    if (room.artifact_refs.empty()) throw Error(ErrorCode::NoSourceImage, "room '" + room_id + "' has no image yet");
    parent = session::find_artifact(sessions_.store(), room.artifact_refs.back());
    if (!parent) throw Error(ErrorCode::StorageError, "artifact '" + room.artifact_refs.back() + "' metadata missing");
  }
  const auto source_bytes = sessions_.store().get_blob(parent->bytes_ref);
  if (!source_bytes) throw Error(ErrorCode::StorageError, "image bytes of '" + parent->artifact_id + "' missing");

  const std::vector<std::uint8_t> bytes = revisions_.revise(*source_bytes, revision_request_text(prompt_set.items));
  if (bytes.empty()) throw Error(ErrorCode::ImageProviderError, "image provider returned no image");
  const Reservation ids = reserve(room_id, name, false);
  sessions_.store().put_blob(session::artifact_blob_key(ids.artifact_id), bytes);
  const std::string hash = digest::content_hash(bytes);

  return store::run_transaction(
      sessions_.store(),
      [&](store::Transaction& tx) {
        RoomDocument latest = session::load_room(tx, room_id);
        require_member(latest, name);
        const TimestampMs now = sessions_.clock().now_ms();

        ImageArtifact artifact;
        artifact.artifact_id = ids.artifact_id;
        artifact.room_id = room_id;
        artifact.kind = ArtifactKind::RevisedDesign;
        artifact.source_snapshot = parent->source_snapshot;
        artifact.parent_artifact = parent->artifact_id;
        artifact.prompt_set = prompt_set_id;
        artifact.bytes_ref = session::artifact_blob_key(ids.artifact_id);
        artifact.content_hash = hash;
        artifact.created_round = latest.current_round;
        artifact.generation_index = parent->generation_index + 1;
        artifact.created_at_ms = now;

        ChatMessage notice = announcement(
            name + " generated a revised design image (generation " + std::to_string(artifact.generation_index) + ").",
            now, latest.current_round, Attachment{"artifact", artifact.artifact_id});
        artifact.event_seq = session::append_message(tx, latest, notice).seq;

        latest.artifact_refs.push_back(artifact.artifact_id);
        tx.create(session::artifact_meta_key(artifact.artifact_id), artifact);
        session::save_room(tx, latest);
        return artifact;
      },
      sessions_.retry_policy());
}

std::vector<ImageArtifact> SceneStudio::list_artifacts(const std::string& room_id) const {
  std::vector<ImageArtifact> out;
  for (const auto& id : sessions_.room(room_id).artifact_refs) out.push_back(artifact(id));
  return out;
}

std::vector<SceneSnapshot> SceneStudio::list_snapshots(const std::string& room_id) const {
  std::vector<SceneSnapshot> out;
  for (const auto& id : sessions_.room(room_id).scene_refs) {
    auto snapshot = session::find_snapshot(sessions_.store(), id);
    if (!snapshot) throw Error(ErrorCode::StorageError, "snapshot '" + id + "' missing");
    out.push_back(std::move(*snapshot));
  }
  return out;
}

ImageArtifact SceneStudio::artifact(const std::string& artifact_id) const {
  auto found = session::find_artifact(sessions_.store(), artifact_id);
  if (!found) throw Error(ErrorCode::UnknownArtifact, "artifact '" + artifact_id + "' does not exist");
  return *found;
}

std::vector<std::uint8_t> SceneStudio::artifact_bytes(const std::string& artifact_id) const {
  const ImageArtifact meta = artifact(artifact_id);
  auto bytes = sessions_.store().get_blob(meta.bytes_ref);
  if (!bytes) throw Error(ErrorCode::StorageError, "image bytes of '" + artifact_id + "' missing");
  return *bytes;
}

}  // namespace codesign::scene
