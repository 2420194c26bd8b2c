#pragma once

#include "codesign/agents/agent_invoker.hpp"
#include "codesign/model/room.hpp"
#include "codesign/session/session_service.hpp"

namespace codesign::agents {

enum class RegistrationPhase { AtCreation, MidSession };

NLOHMANN_JSON_SERIALIZE_ENUM(RegistrationPhase, {
    {RegistrationPhase::AtCreation, "AtCreation"},
    {RegistrationPhase::MidSession, "MidSession"},
})

/// On-demand expert personas. Registration is per room and append-only;
/// an expert added mid-session answers from the following round on.
class ExpertDesk {
 public:
  ExpertDesk(session::SessionService& sessions, const AgentInvoker& invoker);

  /// AtCreation requires the lobby and activates in round 1; MidSession
  /// requires an active room and activates in current_round + 1.
  AgentActivation register_expert(const std::string& room_id, AgentRole role, RegistrationPhase phase);

  /// Stores one expert reply in the current round. Expert replies never
  /// count toward round completion.
  ChatMessage query_expert(const std::string& room_id, AgentRole role, std::string_view asked_by);

 private:
  session::SessionService& sessions_;
  const AgentInvoker& invoker_;
};

}  // namespace codesign::agents
