#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "codesign/clock.hpp"
#include "codesign/model/roles.hpp"

namespace codesign {

/// Reference from a chat message to an object announced by it.
struct Attachment {
  std::string kind;  // "snapshot" | "artifact" | "prompt_set"
  std::string id;

  friend bool operator==(const Attachment&, const Attachment&) = default;
};

struct ChatMessage {
  std::string room_id;
  std::int64_t seq = 0;  // assigned by the store transaction; gapless per room
  std::string author;
  MessageRole role = MessageRole::User;
  std::string content;
  TimestampMs timestamp_ms = 0;
  int round_index = 1;
  std::optional<Attachment> attachment;

  friend bool operator==(const ChatMessage&, const ChatMessage&) = default;
};

void to_json(nlohmann::json& j, const Attachment& a);
void from_json(const nlohmann::json& j, Attachment& a);
void to_json(nlohmann::json& j, const ChatMessage& m);
void from_json(const nlohmann::json& j, ChatMessage& m);

}  // namespace codesign
