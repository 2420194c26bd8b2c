#include "codesign/agents/expert_desk.hpp"

#include "codesign/error.hpp"
#include "codesign/session/room_repository.hpp"

namespace codesign::agents {

ExpertDesk::ExpertDesk(session::SessionService& sessions, const AgentInvoker& invoker)
    : sessions_(sessions), invoker_(invoker) {}

AgentActivation ExpertDesk::register_expert(const std::string& room_id, AgentRole role, RegistrationPhase phase) {
  if (role != AgentRole::Designer && role != AgentRole::Planner) {
    throw Error(ErrorCode::InvalidRole, std::string(to_string(role)) + " cannot be registered as an expert");
  }
  return store::run_transaction(
      sessions_.store(),
      [&](store::Transaction& tx) {
        RoomDocument room = session::load_room(tx, room_id);
        if (room.find_agent(role)) {
          throw Error(ErrorCode::AlreadyRegistered,
                      std::string(agent_label(role)) + " is already part of room '" + room_id + "'");
        }
        AgentActivation activation{role, 1};
        if (phase == RegistrationPhase::AtCreation) {
          if (room.status != RoomStatus::Lobby) {
            throw Error(ErrorCode::InvalidPhase, "experts can only be added at creation while the room is in the lobby");
          }
        } else {
          if (room.status != RoomStatus::Active) {
            throw Error(ErrorCode::InvalidPhase, "mid-session registration requires an active room");
          }
          activation.activation_round = room.current_round + 1;
        }
        room.agent_roster.push_back(activation);

        ChatMessage notice;
        notice.author = "System";
        notice.role = MessageRole::System;
        notice.content = std::string(agent_label(role)) + " joined the workshop and can be asked from round " +
                         std::to_string(activation.activation_round) + ".";
        notice.timestamp_ms = sessions_.clock().now_ms();
        notice.round_index = room.current_round;
        session::append_message(tx, room, notice);
        session::save_room(tx, room);
        return activation;
      },
      sessions_.retry_policy());
}

ChatMessage ExpertDesk::query_expert(const std::string& room_id, AgentRole role, std::string_view asked_by) {
  const Username name = session::normalize_username(asked_by, sessions_.limits().max_username_length);
  const RoomDocument room = sessions_.room(room_id);
  if (room.status != RoomStatus::Active) {
    throw Error(ErrorCode::RoomNotActive, "room '" + room_id + "' is not Active");
  }
  if (!room.has_participant(name)) {
    throw Error(ErrorCode::UnknownUser, "'" + name + "' is not a participant of room '" + room_id + "'");
  }
  const AgentActivation* activation = room.find_agent(role);
  if (role == AgentRole::Facilitator || role == AgentRole::PromptParser || !activation) {
    throw Error(ErrorCode::AgentNotActive, std::string(to_string(role)) + " is not registered in room '" + room_id + "'");
  }
  if (room.current_round < activation->activation_round) {
    throw Error(ErrorCode::AgentNotActive, std::string(agent_label(role)) + " joins in round " +
                                               std::to_string(activation->activation_round));
  }

  const auto history = session::read_messages(sessions_.store(), room_id, 0, room.next_seq);
  ChatMessage reply = invoker_.invoke_expert(role, history, room.current_round);

  return store::run_transaction(
      sessions_.store(),
      [&](store::Transaction& tx) {
        RoomDocument latest = session::load_room(tx, room_id);
        ChatMessage stored = reply;
        stored.timestamp_ms = sessions_.clock().now_ms();
        stored.round_index = latest.current_round;
        session::append_message(tx, latest, stored);
        session::save_room(tx, latest);
        return stored;
      },
      sessions_.retry_policy());
}

}  // namespace codesign::agents
