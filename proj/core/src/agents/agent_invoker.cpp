#include "codesign/agents/agent_invoker.hpp"

#include <algorithm>

#include "codesign/error.hpp"
#include "codesign/util/text.hpp"

namespace codesign::agents {
namespace {

HistoryEntry to_entry(const ChatMessage& m) {
  switch (m.role) {
    case MessageRole::User: return {m.author, m.content};
    case MessageRole::Facilitator: return {std::string(agent_label(AgentRole::Facilitator)), m.content};
    case MessageRole::Designer: return {std::string(agent_label(AgentRole::Designer)), m.content};
    case MessageRole::Planner: return {std::string(agent_label(AgentRole::Planner)), m.content};
    case MessageRole::System: break;
  }
  return {"System", m.content};
}

bool is_scene_announcement(const ChatMessage& m) {
  return m.role == MessageRole::System && m.round_index == 1 && m.attachment && m.attachment->kind == "snapshot";
}

}  // namespace

std::vector<HistoryEntry> build_history(std::span<const ChatMessage> messages, const HistoryLimits& limits) {
  constexpr auto npos = static_cast<std::size_t>(-1);
  const auto found = std::find_if(messages.begin(), messages.end(), is_scene_announcement);
  const std::size_t pinned = found == messages.end() ? npos : static_cast<std::size_t>(found - messages.begin());

  std::size_t budget_messages = limits.max_messages;
  std::size_t budget_chars = limits.max_chars;
  if (pinned != npos) {
    budget_messages = budget_messages > 0 ? budget_messages - 1 : 0;
    const auto cost = text::code_point_count(messages[pinned].content);
    budget_chars = budget_chars > cost ? budget_chars - cost : 0;
  }

  // Walk newest to oldest until either budget runs out.
  std::size_t first_kept = messages.size();
  std::size_t kept = 0;
  std::size_t used_chars = 0;
  for (std::size_t i = messages.size(); i-- > 0;) {
    if (i == pinned) {
      first_kept = i;
      continue;
    }
    const auto cost = text::code_point_count(messages[i].content);
    if (kept + 1 > budget_messages || used_chars + cost > budget_chars) break;
    ++kept;
    used_chars += cost;
    first_kept = i;
  }

  std::vector<HistoryEntry> out;
  if (pinned != npos && pinned < first_kept) out.push_back(to_entry(messages[pinned]));
  for (std::size_t i = first_kept; i < messages.size(); ++i) out.push_back(to_entry(messages[i]));
  return out;
}

AgentInvoker::AgentInvoker(const PersonaCatalog& personas, ChatProvider& provider, HistoryLimits limits)
    : personas_(personas), provider_(provider), limits_(limits) {}

ChatMessage AgentInvoker::invoke_facilitator(std::span<const ChatMessage> history, int completed_round) const {
  if (completed_round < 1) throw Error(ErrorCode::InvalidArgument, "completed_round must be >= 1");
  return invoke(AgentRole::Facilitator, history, completed_round);
}

ChatMessage AgentInvoker::invoke_expert(AgentRole role, std::span<const ChatMessage> history, int round) const {
  if (role != AgentRole::Designer && role != AgentRole::Planner) {
    throw Error(ErrorCode::InvalidRole, "expert role must be Designer or Planner");
  }
  return invoke(role, history, round);
}

std::string AgentInvoker::complete(AgentRole role, std::vector<HistoryEntry> turns) const {
  const auto& config = personas_.config(role);
  CompletionRequest request{config.system_prompt, std::move(turns), config.params};
  std::string reply = text::trim(provider_.complete(request));
  if (reply.empty()) throw Error(ErrorCode::ProviderError, "provider returned an empty completion");
  return reply;
}

ChatMessage AgentInvoker::invoke(AgentRole role, std::span<const ChatMessage> history, int round) const {
  if (history.empty()) throw Error(ErrorCode::EmptyHistory, "agent invocation needs a non-empty history");
  ChatMessage message;
  message.room_id = history.front().room_id;
  message.author = std::string(agent_label(role));
  message.role = message_role_for(role);
  message.round_index = round;
  message.content = complete(role, build_history(history, limits_));
  return message;
}

}  // namespace codesign::agents
