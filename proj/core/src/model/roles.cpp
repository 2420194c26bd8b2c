#include "codesign/model/roles.hpp"

namespace codesign {

std::string_view to_string(MessageRole role) noexcept {
  switch (role) {
    case MessageRole::User: return "User";
    case MessageRole::Facilitator: return "Facilitator";
    case MessageRole::Designer: return "Designer";
    case MessageRole::Planner: return "Planner";
    case MessageRole::System: return "System";
  }
  return "Unknown";
}

std::string_view to_string(RoomStatus status) noexcept {
  switch (status) {
    case RoomStatus::Lobby: return "Lobby";
    case RoomStatus::Active: return "Active";
    case RoomStatus::Ended: return "Ended";
  }
  return "Unknown";
}

std::string_view to_string(AgentRole role) noexcept {
  switch (role) {
    case AgentRole::Facilitator: return "Facilitator";
    case AgentRole::Designer: return "Designer";
    case AgentRole::Planner: return "Planner";
    case AgentRole::PromptParser: return "PromptParser";
  }
  return "Unknown";
}

std::optional<AgentRole> parse_agent_role(std::string_view name) noexcept {
  for (auto role : {AgentRole::Facilitator, AgentRole::Designer, AgentRole::Planner, AgentRole::PromptParser}) {
    if (to_string(role) == name) return role;
  }
  return std::nullopt;
}

std::string_view agent_label(AgentRole role) noexcept {
  switch (role) {
    case AgentRole::Facilitator: return "AI Facilitator";
    case AgentRole::Designer: return "AI Designer";
    case AgentRole::Planner: return "AI Planner";
    case AgentRole::PromptParser: return "AI Prompt Parser";
  }
  return "AI";
}

MessageRole message_role_for(AgentRole role) noexcept {
  switch (role) {
    case AgentRole::Designer: return MessageRole::Designer;
    case AgentRole::Planner: return MessageRole::Planner;
    case AgentRole::Facilitator:
    case AgentRole::PromptParser: break;
  }
  return MessageRole::Facilitator;
}

}  // namespace codesign
