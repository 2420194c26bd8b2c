#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "codesign/agents/agent_invoker.hpp"
#include "codesign/clock.hpp"
#include "codesign/model/message.hpp"
#include "codesign/model/room.hpp"
#include "codesign/model/scene.hpp"
#include "codesign/store/document_store.hpp"
#include "codesign/store/transaction.hpp"

namespace codesign::session {

struct SessionLimits {
  std::size_t max_participants = 16;
  std::size_t max_username_length = 64;
};

struct PostOutcome {
  ChatMessage stored_message;
  bool round_completed = false;
  std::optional<ChatMessage> facilitator_reply;  // only when round_completed
  std::optional<int> new_round;
  /// Set when the round advanced but the facilitator call failed; a System
  /// message records the failure and the round can be retried.
  std::optional<std::string> facilitator_error;
};

struct FacilitationOutcome {
  int round = 0;
  std::optional<ChatMessage> reply;
  std::optional<std::string> error;
};

struct RoundAdvance {
  RoomDocument room;
  bool advanced = false;
};

/// Everything a polling client needs after `since_seq`.
struct RoomDelta {
  RoomDocument room;
  std::vector<ChatMessage> messages;    // seq > since_seq, ascending
  std::vector<ImageArtifact> artifacts;  // announced after since_seq
};

/// Room lifecycle and the round protocol.
///
/// A round closes when every participant has posted at least one User
/// message in it. The post that closes it advances current_round, clears
/// responded_users and records a facilitation claim, all in one store
/// transaction; only that caller invokes the facilitator, after commit and
/// without holding anything. Provider failures never block the round: the
/// claim is marked Failed and `retry_facilitator` can re-run it.
class SessionService {
 public:
  SessionService(store::DocumentStore& store, const agents::AgentInvoker& invoker, Clock& clock,
                 SessionLimits limits = {}, store::RetryPolicy retry = {});

  RoomDocument create_or_join_room(std::string_view username, std::string_view room_id);
  RoomDocument set_ready(const std::string& room_id, std::string_view username, bool ready);
  PostOutcome post_message(const std::string& room_id, std::string_view username, std::string_view content);

  /// Closes the current round without synthesis. With `from_round`, the
  /// call is a no-op (advanced = false) unless the room is still in that
  /// round, so concurrent initiations advance it once.
  RoundAdvance start_new_round(const std::string& room_id, std::string_view username,
                               std::optional<int> from_round = std::nullopt);

  RoomDelta get_room_state(const std::string& room_id, std::int64_t since_seq) const;
  RoomDocument end_session(const std::string& room_id, std::string_view username);

  /// Re-invokes the facilitator for a round whose synthesis failed.
  FacilitationOutcome retry_facilitator(const std::string& room_id, std::string_view username, int round);

  RoomDocument room(const std::string& room_id) const;
  std::vector<ChatMessage> messages(const std::string& room_id, std::int64_t after_seq = 0) const;

  store::DocumentStore& store() const { return store_; }
  Clock& clock() const { return clock_; }
  const store::RetryPolicy& retry_policy() const { return retry_; }
  const SessionLimits& limits() const { return limits_; }

 private:
  FacilitationOutcome facilitate(const std::string& room_id, int round, std::int64_t through_seq);

  store::DocumentStore& store_;
  const agents::AgentInvoker& invoker_;
  Clock& clock_;
  SessionLimits limits_;
  store::RetryPolicy retry_;
};

}  // namespace codesign::session
