#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "codesign/clock.hpp"
#include "codesign/model/roles.hpp"

namespace codesign {

struct AgentActivation {
  AgentRole agent_role = AgentRole::Facilitator;
  int activation_round = 1;

  friend bool operator==(const AgentActivation&, const AgentActivation&) = default;
};

enum class FacilitationState { InFlight, Failed, Done };

NLOHMANN_JSON_SERIALIZE_ENUM(FacilitationState, {
    {FacilitationState::InFlight, "InFlight"},
    {FacilitationState::Failed, "Failed"},
    {FacilitationState::Done, "Done"},
})

/// Claim record for the facilitator synthesis of one completed round.
/// Created by the transaction that completes the round; `through_seq` is
/// the last message seq that belongs to the synthesized history.
struct Facilitation {
  FacilitationState state = FacilitationState::InFlight;
  std::int64_t through_seq = 0;

  friend bool operator==(const Facilitation&, const Facilitation&) = default;
};

/// Authoritative per-room state, stored as one document.
///
/// Invariants maintained by the session service:
///   - responded_users is a subset of participants
///   - status only moves Lobby -> Active -> Ended
///   - current_round grows by exactly one per closed round
///   - in Lobby, current_round == 1 and responded_users is empty
struct RoomDocument {
  std::string room_id;
  std::vector<Username> participants;  // join order
  std::map<Username, bool> readiness;
  RoomStatus status = RoomStatus::Lobby;
  int current_round = 1;
  std::set<Username> responded_users;
  std::vector<AgentActivation> agent_roster;
  std::int64_t next_seq = 0;  // last assigned message seq; 0 when the log is empty
  std::vector<std::string> scene_refs;
  std::vector<std::string> artifact_refs;
  std::vector<std::string> prompt_set_refs;
  std::map<int, Facilitation> facilitation;  // keyed by completed round
  std::int64_t snapshot_counter = 0;
  std::int64_t artifact_counter = 0;
  std::int64_t prompt_set_counter = 0;
  TimestampMs created_at_ms = 0;
  std::optional<TimestampMs> started_at_ms;
  std::optional<TimestampMs> ended_at_ms;

  bool has_participant(const Username& name) const;
  const AgentActivation* find_agent(AgentRole role) const;

  friend bool operator==(const RoomDocument&, const RoomDocument&) = default;
};

void to_json(nlohmann::json& j, const AgentActivation& a);
void from_json(const nlohmann::json& j, AgentActivation& a);
void to_json(nlohmann::json& j, const Facilitation& f);
void from_json(const nlohmann::json& j, Facilitation& f);
void to_json(nlohmann::json& j, const RoomDocument& r);
void from_json(const nlohmann::json& j, RoomDocument& r);

}  // namespace codesign
