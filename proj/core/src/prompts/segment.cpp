#include "codesign/prompts/segment.hpp"

#include "codesign/error.hpp"
#include "codesign/util/canonical_json.hpp"

namespace codesign::prompts {

SegmentDocument serialize_segment(std::span<const ChatMessage> history, std::string_view requesting_user) {
  SegmentDocument segment;
  segment.user_id = std::string(requesting_user);
  std::int64_t first_seq = 0;
  std::int64_t last_seq = 0;
  for (const auto& m : history) {
    if (m.role == MessageRole::System) continue;
    if (segment.messages.empty()) first_seq = m.seq;
    last_seq = m.seq;
    segment.messages.push_back({m.author, m.role, m.content, m.round_index});
  }
  if (segment.messages.empty()) {
    throw Error(ErrorCode::EmptyHistory, "no discussion messages to build a segment from");
  }
  segment.segment_id = history.front().room_id + "#" + std::to_string(first_seq) + "-" + std::to_string(last_seq);
  return segment;
}

std::string encode_segment(const SegmentDocument& segment) {
  nlohmann::json messages = nlohmann::json::array();
  for (const auto& m : segment.messages) {
    messages.push_back(
        {{"author", m.author}, {"role", m.role}, {"content", m.content}, {"round_index", m.round_index}});
  }
  return canonical_dump(
      {{"user_id", segment.user_id}, {"segment_id", segment.segment_id}, {"messages", std::move(messages)}});
}

SegmentDocument decode_segment(std::string_view encoded) {
  const auto j = nlohmann::json::parse(encoded);
  SegmentDocument segment;
  j.at("user_id").get_to(segment.user_id);
  j.at("segment_id").get_to(segment.segment_id);
  for (const auto& m : j.at("messages")) {
    segment.messages.push_back({m.at("author").get<std::string>(), m.at("role").get<MessageRole>(),
                                m.at("content").get<std::string>(), m.at("round_index").get<int>()});
  }
  return segment;
}

}  // namespace codesign::prompts
