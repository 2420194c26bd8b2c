#include "codesign/prompts/prompt_pipeline.hpp"

#include <set>

#include "codesign/error.hpp"
#include "codesign/session/room_repository.hpp"
#include "codesign/util/text.hpp"

namespace codesign::prompts {
namespace {

// Drops list decoration some models add despite the plain-text instruction.
std::string strip_list_marker(std::string line) {
  std::size_t i = 0;
  if (line.size() >= 2 && (line[0] == '-' || line[0] == '*') && line[1] == ' ') {
    i = 2;
  } else {
    while (i < line.size() && line[i] >= '0' && line[i] <= '9') ++i;
    if (i > 0 && i + 1 < line.size() && (line[i] == '.' || line[i] == ')') && line[i + 1] == ' ') {
      i += 2;
    } else {
      i = 0;
    }
  }
  return text::trim(std::string_view(line).substr(i));
}

void collect_valid(std::string_view output, const ValidationContext& context, std::vector<PromptItem>& items,
                   std::set<std::string>& seen) {
  std::size_t start = 0;
  while (start <= output.size()) {
    std::size_t end = output.find('\n', start);
    if (end == std::string_view::npos) end = output.size();
    const std::string line = strip_list_marker(text::trim(output.substr(start, end - start)));
    start = end + 1;
    if (line.empty()) continue;
    const auto result = validate_prompt(line, context);
    if (!result.valid) continue;
    if (!seen.insert(dedup_key(line)).second) continue;
    items.push_back({line, PromptOrigin::Extracted, true, {}});
  }
}

void dedupe(std::vector<PromptItem>& items) {
  std::set<std::string> seen;
  std::vector<PromptItem> kept;
  kept.reserve(items.size());
  for (auto& item : items) {
    if (seen.insert(dedup_key(item.text)).second) kept.push_back(std::move(item));
  }
  items = std::move(kept);
}

PromptItem user_item(std::string text, PromptOrigin origin, const ValidationContext& context) {
  const auto result = validate_prompt(text, context);
  return {text::trim(text), origin, result.valid, result.violations};
}

}  // namespace

PromptSet extract_prompts(const SegmentDocument& segment, const agents::AgentInvoker& invoker,
                          const ValidationContext& context) {
  if (segment.messages.empty()) throw Error(ErrorCode::EmptyHistory, "segment has no messages");
  const std::string encoded = encode_segment(segment);

  PromptSet set;
  set.source_segment = segment.segment_id;
  std::set<std::string> seen;
  collect_valid(invoker.complete(AgentRole::PromptParser, {{segment.user_id, encoded}}), context, set.items, seen);
  if (set.items.size() < kMinPrompts) {
    collect_valid(invoker.complete(AgentRole::PromptParser, {{segment.user_id, encoded}}), context, set.items, seen);
  }
  if (set.items.size() > kMaxPrompts) set.items.resize(kMaxPrompts);
  set.degraded = set.items.size() < kMinPrompts;
  return set;
}

void from_json(const nlohmann::json& j, PromptEdit& edit) {
  j.at("action").get_to(edit.action);
  if (auto it = j.find("index"); it != j.end() && !it->is_null()) edit.index = it->get<std::size_t>();
  if (auto it = j.find("text"); it != j.end() && !it->is_null()) edit.text = it->get<std::string>();
}

PromptSet apply_edits(PromptSet base, std::span<const PromptEdit> edits, const ValidationContext& context) {
  auto require_index = [&](const PromptEdit& edit) {
    if (!edit.index) throw Error(ErrorCode::InvalidArgument, "edit requires an index");
    if (*edit.index >= base.items.size()) {
      throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(*edit.index) + " is out of range");
    }
    return *edit.index;
  };
  auto require_text = [](const PromptEdit& edit) {
    if (!edit.text) throw Error(ErrorCode::InvalidArgument, "edit requires text");
    if (text::trim(*edit.text).empty()) throw Error(ErrorCode::EmptyText, "prompt text must not be blank");
    return *edit.text;
  };

  for (const auto& edit : edits) {
    switch (edit.action) {
      case EditAction::Edit: {
        const auto i = require_index(edit);
        base.items[i] = user_item(require_text(edit), PromptOrigin::UserEdited, context);
        break;
      }
      case EditAction::Remove:
        base.items.erase(base.items.begin() + static_cast<std::ptrdiff_t>(require_index(edit)));
        break;
      case EditAction::Append:
        base.items.push_back(user_item(require_text(edit), PromptOrigin::UserAdded, context));
        break;
    }
  }
  dedupe(base.items);
  return base;
}

PromptPipeline::PromptPipeline(session::SessionService& sessions, const agents::AgentInvoker& invoker)
    : sessions_(sessions), invoker_(invoker) {}

ValidationContext PromptPipeline::context_for(const std::string& room_id) const {
  const RoomDocument room = sessions_.room(room_id);
  ValidationContext context;
  context.usernames = room.participants;
  for (const auto& id : room.scene_refs) {
    if (auto snapshot = session::find_snapshot(sessions_.store(), id)) {
      context.panorama_ids.push_back(snapshot->view.panorama_id);
    }
  }
  for (const auto& m : session::read_messages(sessions_.store(), room_id, 0, room.next_seq)) {
    if (m.role != MessageRole::System) context.source_messages.push_back(m.content);
  }
  return context;
}

PromptSet PromptPipeline::generate(const std::string& room_id, std::string_view username) {
  const Username name = session::normalize_username(username, sessions_.limits().max_username_length);
  const RoomDocument room = sessions_.room(room_id);
  if (room.status != RoomStatus::Active) throw Error(ErrorCode::RoomNotActive, "room '" + room_id + "' is not Active");
  if (!room.has_participant(name)) {
    throw Error(ErrorCode::UnknownUser, "'" + name + "' is not a participant of room '" + room_id + "'");
  }

  const auto history = session::read_messages(sessions_.store(), room_id, 0, room.next_seq);
  if (history.empty()) throw Error(ErrorCode::EmptyHistory, "room '" + room_id + "' has no discussion yet");
  const SegmentDocument segment = serialize_segment(history, name);
  PromptSet extracted = extract_prompts(segment, invoker_, context_for(room_id));

  return store::run_transaction(
      sessions_.store(),
      [&](store::Transaction& tx) {
        RoomDocument latest = session::load_room(tx, room_id);
        PromptSet set = extracted;
        set.room_id = room_id;
        set.prompt_set_id = room_id + "-ps-" + std::to_string(++latest.prompt_set_counter);
        set.created_round = latest.current_round;
        set.created_at_ms = sessions_.clock().now_ms();
        latest.prompt_set_refs.push_back(set.prompt_set_id);

        ChatMessage notice;
        notice.author = "System";
        notice.role = MessageRole::System;
        notice.content = name + " generated " + std::to_string(set.items.size()) + " design prompts" +
                         (set.degraded ? " (fewer than requested)." : ".");
        notice.timestamp_ms = set.created_at_ms;
        notice.round_index = latest.current_round;
        notice.attachment = Attachment{"prompt_set", set.prompt_set_id};
        session::append_message(tx, latest, notice);

        tx.create(session::prompt_set_key(set.prompt_set_id), set);
        session::save_room(tx, latest);
        return set;
      },
      sessions_.retry_policy());
}

PromptSet PromptPipeline::get(const std::string& prompt_set_id) const {
  auto record = sessions_.store().get(session::prompt_set_key(prompt_set_id));
  if (!record) throw Error(ErrorCode::UnknownPromptSet, "prompt set '" + prompt_set_id + "' does not exist");
  return record->value.get<PromptSet>();
}

std::vector<PromptSet> PromptPipeline::list(const std::string& room_id) const {
  std::vector<PromptSet> out;
  for (const auto& id : sessions_.room(room_id).prompt_set_refs) out.push_back(get(id));
  return out;
}

PromptSet PromptPipeline::edit_prompt_set(const std::string& prompt_set_id, std::span<const PromptEdit> edits) {
  const PromptSet current = get(prompt_set_id);
  const ValidationContext context = context_for(current.room_id);
  return store::run_transaction(
      sessions_.store(),
      [&](store::Transaction& tx) {
        auto value = tx.read(session::prompt_set_key(prompt_set_id));
        if (!value) throw Error(ErrorCode::UnknownPromptSet, "prompt set '" + prompt_set_id + "' does not exist");
        PromptSet edited = apply_edits(value->get<PromptSet>(), edits, context);
        tx.write(session::prompt_set_key(prompt_set_id), edited);
        return edited;
      },
      sessions_.retry_policy());
}

}  // namespace codesign::prompts
