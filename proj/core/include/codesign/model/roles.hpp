#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace codesign {

using Username = std::string;

enum class MessageRole { User, Facilitator, Designer, Planner, System };

enum class RoomStatus { Lobby, Active, Ended };

/// Agent personas. PromptParser is an internal persona used by the prompt
/// pipeline; it never joins a room roster.
enum class AgentRole { Facilitator, Designer, Planner, PromptParser };

NLOHMANN_JSON_SERIALIZE_ENUM(MessageRole, {
    {MessageRole::User, "User"},
    {MessageRole::Facilitator, "Facilitator"},
    {MessageRole::Designer, "Designer"},
    {MessageRole::Planner, "Planner"},
    {MessageRole::System, "System"},
})

NLOHMANN_JSON_SERIALIZE_ENUM(RoomStatus, {
    {RoomStatus::Lobby, "Lobby"},
    {RoomStatus::Active, "Active"},
    {RoomStatus::Ended, "Ended"},
})

NLOHMANN_JSON_SERIALIZE_ENUM(AgentRole, {
    {AgentRole::Facilitator, "Facilitator"},
    {AgentRole::Designer, "Designer"},
    {AgentRole::Planner, "Planner"},
    {AgentRole::PromptParser, "PromptParser"},
})

std::string_view to_string(MessageRole role) noexcept;
std::string_view to_string(RoomStatus status) noexcept;
std::string_view to_string(AgentRole role) noexcept;

std::optional<AgentRole> parse_agent_role(std::string_view name) noexcept;

/// Display label used both as message author and as the speaker label in
/// provider requests ("AI Facilitator", "AI Designer", ...).
std::string_view agent_label(AgentRole role) noexcept;

MessageRole message_role_for(AgentRole role) noexcept;

}  // namespace codesign
