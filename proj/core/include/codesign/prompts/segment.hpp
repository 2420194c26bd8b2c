#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "codesign/model/message.hpp"

namespace codesign::prompts {

struct SegmentMessage {
  std::string author;
  MessageRole role = MessageRole::User;
  std::string content;
  int round_index = 1;

  friend bool operator==(const SegmentMessage&, const SegmentMessage&) = default;
};

/// The discussion excerpt handed to the prompt parser.
struct SegmentDocument {
  std::string user_id;     // requesting user
  std::string segment_id;  // "<room_id>#<first_seq>-<last_seq>"
  std::vector<SegmentMessage> messages;

  friend bool operator==(const SegmentDocument&, const SegmentDocument&) = default;
};

/// Builds a segment from a room log, dropping System messages (join,
/// snapshot and status notices). Throws EmptyHistory when nothing remains.
SegmentDocument serialize_segment(std::span<const ChatMessage> history, std::string_view requesting_user);

/// Canonical interchange bytes: {"messages":[{"author","content","role",
/// "round_index"}...],"segment_id","user_id"} with sorted keys and no
/// whitespace.
std::string encode_segment(const SegmentDocument& segment);
SegmentDocument decode_segment(std::string_view encoded);

}  // namespace codesign::prompts
