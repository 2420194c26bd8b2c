#include "codesign/session/session_service.hpp"

#include <algorithm>

#include "codesign/error.hpp"
#include "codesign/session/room_repository.hpp"
#include "codesign/util/text.hpp"

namespace codesign::session {
namespace {

void require_participant(const RoomDocument& room, const Username& name) {
  if (!room.has_participant(name)) {
    throw Error(ErrorCode::UnknownUser, "'" + name + "' is not a participant of room '" + room.room_id + "'");
  }
}

void require_active(const RoomDocument& room) {
  if (room.status != RoomStatus::Active) {
    throw Error(ErrorCode::RoomNotActive,
                "room '" + room.room_id + "' is " + std::string(to_string(room.status)) + ", not Active");
  }
}

ChatMessage system_message(const RoomDocument& room, std::string content, TimestampMs now, int round) {
  ChatMessage m;
  m.author = "System";
  m.role = MessageRole::System;
  m.content = std::move(content);
  m.timestamp_ms = now;
  m.round_index = round;
  (void)room;
  return m;
}

bool everyone_responded(const RoomDocument& room) {
  return std::all_of(room.participants.begin(), room.participants.end(),
                     [&](const Username& p) { return room.responded_users.count(p) > 0; });
}

}  // namespace

SessionService::SessionService(store::DocumentStore& store, const agents::AgentInvoker& invoker, Clock& clock,
                               SessionLimits limits, store::RetryPolicy retry)
    : store_(store), invoker_(invoker), clock_(clock), limits_(limits), retry_(retry) {}

RoomDocument SessionService::create_or_join_room(std::string_view username, std::string_view room_id) {
  const Username name = normalize_username(username, limits_.max_username_length);
  validate_room_id(room_id);
  const std::string id(room_id);
  return store::run_transaction(
      store_,
      [&](store::Transaction& tx) {
        RoomDocument room;
        if (auto existing = tx.read(room_key(id))) {
          room = existing->get<RoomDocument>();
          if (room.status != RoomStatus::Lobby) {
            throw Error(ErrorCode::RoomClosed, "room '" + id + "' has already started");
          }
          if (room.has_participant(name)) {
            throw Error(ErrorCode::DuplicateUsername, "'" + name + "' is already taken in room '" + id + "'");
          }
          if (room.participants.size() >= limits_.max_participants) {
            throw Error(ErrorCode::RoomFull, "room '" + id + "' is full");
          }
        } else {
          room.room_id = id;
          room.agent_roster.push_back({AgentRole::Facilitator, 1});
          room.created_at_ms = clock_.now_ms();
        }
        room.participants.push_back(name);
        room.readiness[name] = false;
        save_room(tx, room);
        return room;
      },
      retry_);
}

RoomDocument SessionService::set_ready(const std::string& room_id, std::string_view username, bool ready) {
  const Username name = normalize_username(username, limits_.max_username_length);
  return store::run_transaction(
      store_,
      [&](store::Transaction& tx) {
        RoomDocument room = load_room(tx, room_id);
        if (room.status != RoomStatus::Lobby) {
          throw Error(ErrorCode::NotInLobby, "room '" + room_id + "' is no longer in the lobby");
        }
        require_participant(room, name);
        room.readiness[name] = ready;
        const bool all_ready = std::all_of(room.readiness.begin(), room.readiness.end(),
                                           [](const auto& entry) { return entry.second; });
        if (all_ready) {
          room.status = RoomStatus::Active;
          room.responded_users.clear();
          room.started_at_ms = clock_.now_ms();
        }
        save_room(tx, room);
        return room;
      },
      retry_);
}

PostOutcome SessionService::post_message(const std::string& room_id, std::string_view username,
                                         std::string_view content) {
  const Username name = normalize_username(username, limits_.max_username_length);
  if (text::trim(content).empty()) throw Error(ErrorCode::EmptyContent, "message content must not be empty");
  if (!text::is_valid_utf8(content)) throw Error(ErrorCode::InvalidArgument, "message content must be valid UTF-8");

  struct Committed {
    ChatMessage message;
    std::optional<int> completed_round;
    int current_round = 0;
  };
  const Committed committed = store::run_transaction(
      store_,
      [&](store::Transaction& tx) {
        RoomDocument room = load_room(tx, room_id);
        require_active(room);
        require_participant(room, name);

        ChatMessage message;
        message.author = name;
        message.role = MessageRole::User;
        message.content = std::string(content);
        message.timestamp_ms = clock_.now_ms();
        message.round_index = room.current_round;
        append_message(tx, room, message);

        room.responded_users.insert(name);
        std::optional<int> completed;
        if (everyone_responded(room)) {
          completed = room.current_round;
          room.facilitation[room.current_round] = {FacilitationState::InFlight, message.seq};
          ++room.current_round;
          room.responded_users.clear();
        }
        save_room(tx, room);
        return Committed{message, completed, room.current_round};
      },
      retry_);

  PostOutcome outcome;
  outcome.stored_message = committed.message;
  if (!committed.completed_round) return outcome;

  outcome.round_completed = true;
  outcome.new_round = committed.current_round;
  auto facilitation = facilitate(room_id, *committed.completed_round, committed.message.seq);
  outcome.facilitator_reply = std::move(facilitation.reply);
  outcome.facilitator_error = std::move(facilitation.error);
  return outcome;
}

FacilitationOutcome SessionService::facilitate(const std::string& room_id, int round, std::int64_t through_seq) {
  FacilitationOutcome outcome;
  outcome.round = round;
  std::optional<ChatMessage> reply;
  try {
    const auto history = read_messages(store_, room_id, 0, through_seq);
    reply = invoker_.invoke_facilitator(history, round);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ProviderError) throw;
    outcome.error = e.what();
  }

  store::run_transaction(
      store_,
      [&](store::Transaction& tx) {
        RoomDocument room = load_room(tx, room_id);
        auto& claim = room.facilitation.at(round);
        if (claim.state != FacilitationState::InFlight) {
          throw Error(ErrorCode::StorageError, "facilitation claim for round " + std::to_string(round) + " was lost");
        }
        ChatMessage stored;
        if (reply) {
          stored = *reply;
          stored.timestamp_ms = clock_.now_ms();
          stored.round_index = round;
          claim.state = FacilitationState::Done;
        } else {
          stored = system_message(room,
                                  "The AI facilitator could not summarize round " + std::to_string(round) + " (" +
                                      *outcome.error + "). Any participant can retry.",
                                  clock_.now_ms(), round);
          claim.state = FacilitationState::Failed;
        }
        append_message(tx, room, stored);
        save_room(tx, room);
        if (reply) outcome.reply = stored;
      },
      retry_);
  return outcome;
}

FacilitationOutcome SessionService::retry_facilitator(const std::string& room_id, std::string_view username,
                                                      int round) {
  const Username name = normalize_username(username, limits_.max_username_length);
  const std::int64_t through_seq = store::run_transaction(
      store_,
      [&](store::Transaction& tx) {
        RoomDocument room = load_room(tx, room_id);
        require_participant(room, name);
        auto it = room.facilitation.find(round);
        if (it == room.facilitation.end() || it->second.state != FacilitationState::Failed) {
          throw Error(ErrorCode::FacilitationNotRetryable,
                      "round " + std::to_string(round) + " has no failed facilitation to retry");
        }
        it->second.state = FacilitationState::InFlight;
        save_room(tx, room);
        return it->second.through_seq;
      },
      retry_);
  return facilitate(room_id, round, through_seq);
}

RoundAdvance SessionService::start_new_round(const std::string& room_id, std::string_view username,
                                             std::optional<int> from_round) {
  const Username name = normalize_username(username, limits_.max_username_length);
  return store::run_transaction(
      store_,
      [&](store::Transaction& tx) {
        RoomDocument room = load_room(tx, room_id);
        require_active(room);
        require_participant(room, name);
        if (from_round && *from_round != room.current_round) return RoundAdvance{room, false};

        const int closed = room.current_round;
        ++room.current_round;
        room.responded_users.clear();
        ChatMessage notice = system_message(
            room,
            name + " closed round " + std::to_string(closed) + " and started round " +
                std::to_string(room.current_round) + ".",
            clock_.now_ms(), room.current_round);
        append_message(tx, room, notice);
        save_room(tx, room);
        return RoundAdvance{room, true};
      },
      retry_);
}

RoomDelta SessionService::get_room_state(const std::string& room_id, std::int64_t since_seq) const {
  if (since_seq < 0) throw Error(ErrorCode::InvalidArgument, "since_seq must be >= 0");
  RoomDelta delta;
  delta.room = get_room(store_, room_id);
  if (since_seq < delta.room.next_seq) delta.messages = read_messages(store_, room_id, since_seq, delta.room.next_seq);
  for (const auto& id : delta.room.artifact_refs) {
    auto artifact = find_artifact(store_, id);
    if (!artifact) throw Error(ErrorCode::StorageError, "artifact '" + id + "' metadata missing");
    if (artifact->event_seq > since_seq) delta.artifacts.push_back(std::move(*artifact));
  }
  return delta;
}

RoomDocument SessionService::end_session(const std::string& room_id, std::string_view username) {
  const Username name = normalize_username(username, limits_.max_username_length);
  return store::run_transaction(
      store_,
      [&](store::Transaction& tx) {
        RoomDocument room = load_room(tx, room_id);
        require_active(room);
        require_participant(room, name);
        room.status = RoomStatus::Ended;
        room.ended_at_ms = clock_.now_ms();
        ChatMessage notice = system_message(room, name + " ended the session.", *room.ended_at_ms, room.current_round);
        append_message(tx, room, notice);
        save_room(tx, room);
        return room;
      },
      retry_);
}

RoomDocument SessionService::room(const std::string& room_id) const { return get_room(store_, room_id); }

std::vector<ChatMessage> SessionService::messages(const std::string& room_id, std::int64_t after_seq) const {
  const RoomDocument room = get_room(store_, room_id);
  return read_messages(store_, room_id, after_seq, room.next_seq);
}

}  // namespace codesign::session
