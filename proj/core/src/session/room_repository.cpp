#include "codesign/session/room_repository.hpp"

#include "codesign/error.hpp"
#include "codesign/util/text.hpp"

namespace codesign::session {

std::string room_key(const std::string& room_id) { return "rooms/" + room_id; }

std::string message_key(const std::string& room_id, std::int64_t seq) {
  return "messages/" + room_id + "/" + std::to_string(seq);
}

std::string snapshot_key(const std::string& snapshot_id) { return "snapshots/" + snapshot_id; }
std::string artifact_meta_key(const std::string& artifact_id) { return "artifact_meta/" + artifact_id; }
std::string artifact_blob_key(const std::string& artifact_id) { return "artifacts/" + artifact_id; }
std::string prompt_set_key(const std::string& prompt_set_id) { return "prompt_sets/" + prompt_set_id; }

RoomDocument load_room(store::Transaction& tx, const std::string& room_id) {
  auto value = tx.read(room_key(room_id));
  if (!value) throw Error(ErrorCode::UnknownRoom, "room '" + room_id + "' does not exist");
  return value->get<RoomDocument>();
}

std::optional<RoomDocument> find_room(const store::DocumentStore& store, const std::string& room_id) {
  auto record = store.get(room_key(room_id));
  if (!record) return std::nullopt;
  return record->value.get<RoomDocument>();
}

RoomDocument get_room(const store::DocumentStore& store, const std::string& room_id) {
  auto room = find_room(store, room_id);
  if (!room) throw Error(ErrorCode::UnknownRoom, "room '" + room_id + "' does not exist");
  return std::move(*room);
}

void save_room(store::Transaction& tx, const RoomDocument& room) { tx.write(room_key(room.room_id), room); }

const ChatMessage& append_message(store::Transaction& tx, RoomDocument& room, ChatMessage& message) {
  message.room_id = room.room_id;
  message.seq = ++room.next_seq;
  tx.create(message_key(room.room_id, message.seq), message);
  return message;
}

std::vector<ChatMessage> read_messages(const store::DocumentStore& store, const std::string& room_id,
                                       std::int64_t after_seq, std::int64_t through_seq) {
  std::vector<ChatMessage> out;
  for (std::int64_t seq = after_seq + 1; seq <= through_seq; ++seq) {
    auto record = store.get(message_key(room_id, seq));
    if (!record) {
      throw Error(ErrorCode::StorageError, "message " + std::to_string(seq) + " of room '" + room_id + "' missing");
    }
    out.push_back(record->value.get<ChatMessage>());
  }
  return out;
}

std::optional<ImageArtifact> find_artifact(const store::DocumentStore& store, const std::string& artifact_id) {
  auto record = store.get(artifact_meta_key(artifact_id));
  if (!record) return std::nullopt;
  return record->value.get<ImageArtifact>();
}

std::optional<SceneSnapshot> find_snapshot(const store::DocumentStore& store, const std::string& snapshot_id) {
  auto record = store.get(snapshot_key(snapshot_id));
  if (!record) return std::nullopt;
  return record->value.get<SceneSnapshot>();
}

namespace {
bool has_control_chars(std::string_view s) {
  std::size_t pos = 0;
  while (pos < s.size()) {
    const char32_t cp = text::next_code_point(s, pos);
    if (cp < 0x20 || cp == 0x7F) return true;
  }
  return false;
}
}  // namespace

std::string normalize_username(std::string_view raw, std::size_t max_length) {
  if (!text::is_valid_utf8(raw)) throw Error(ErrorCode::InvalidArgument, "username must be valid UTF-8");
  std::string name = text::trim(raw);
  if (name.empty()) throw Error(ErrorCode::InvalidArgument, "username must not be empty");
  if (text::code_point_count(name) > max_length) {
    throw Error(ErrorCode::InvalidArgument, "username exceeds " + std::to_string(max_length) + " characters");
  }
  if (has_control_chars(name)) throw Error(ErrorCode::InvalidArgument, "username contains control characters");
  return name;
}

void validate_room_id(std::string_view room_id) {
  if (room_id.empty()) throw Error(ErrorCode::InvalidArgument, "room id must not be empty");
  if (room_id.size() > 128) throw Error(ErrorCode::InvalidArgument, "room id exceeds 128 bytes");
  if (!text::is_valid_utf8(room_id) || has_control_chars(room_id) || room_id.find('/') != std::string_view::npos) {
    throw Error(ErrorCode::InvalidArgument, "room id must be printable UTF-8 without '/'");
  }
}

}  // namespace codesign::session
