#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "codesign/model/message.hpp"
#include "codesign/model/room.hpp"
#include "codesign/model/scene.hpp"
#include "codesign/store/document_store.hpp"
#include "codesign/store/transaction.hpp"

/// Store key layout and typed accessors shared by every service that
/// touches a room. All writers go through these helpers so seq assignment
/// and message persistence always happen in the same transaction.
namespace codesign::session {

std::string room_key(const std::string& room_id);
std::string message_key(const std::string& room_id, std::int64_t seq);
std::string snapshot_key(const std::string& snapshot_id);
std::string artifact_meta_key(const std::string& artifact_id);
std::string artifact_blob_key(const std::string& artifact_id);
std::string prompt_set_key(const std::string& prompt_set_id);

/// Throws UnknownRoom if absent.
RoomDocument load_room(store::Transaction& tx, const std::string& room_id);
RoomDocument get_room(const store::DocumentStore& store, const std::string& room_id);
std::optional<RoomDocument> find_room(const store::DocumentStore& store, const std::string& room_id);
void save_room(store::Transaction& tx, const RoomDocument& room);

/// Assigns the next seq to `message`, records it in `room` and stages the
/// message document. The caller still has to save the room.
const ChatMessage& append_message(store::Transaction& tx, RoomDocument& room, ChatMessage& message);

/// Messages with after_seq < seq <= through_seq, in seq order.
std::vector<ChatMessage> read_messages(const store::DocumentStore& store, const std::string& room_id,
                                       std::int64_t after_seq, std::int64_t through_seq);

std::optional<ImageArtifact> find_artifact(const store::DocumentStore& store, const std::string& artifact_id);
std::optional<SceneSnapshot> find_snapshot(const store::DocumentStore& store, const std::string& snapshot_id);

/// Validation shared by join and every user-attributed operation.
std::string normalize_username(std::string_view raw, std::size_t max_length = 64);
void validate_room_id(std::string_view room_id);

}  // namespace codesign::session
