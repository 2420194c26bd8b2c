#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "codesign/agents/agent_config.hpp"
#include "codesign/agents/chat_provider.hpp"
#include "codesign/model/message.hpp"

namespace codesign::agents {

struct HistoryLimits {
  std::size_t max_messages = 200;
  std::size_t max_chars = 60'000;
};

/// Converts a room log to labeled request turns, keeping the newest
/// messages within `limits` (oldest dropped first). The first round-1
/// snapshot announcement is always retained at the front.
std::vector<HistoryEntry> build_history(std::span<const ChatMessage> messages, const HistoryLimits& limits);

/// Issues persona-configured requests. Stateless apart from the provider.
class AgentInvoker {
 public:
  AgentInvoker(const PersonaCatalog& personas, ChatProvider& provider, HistoryLimits limits = {});

  /// One provider call with the facilitator config; the returned message
  /// (seq unassigned) is tagged with `completed_round`.
  ChatMessage invoke_facilitator(std::span<const ChatMessage> history, int completed_round) const;

  /// One provider call with the Designer or Planner config.
  ChatMessage invoke_expert(AgentRole role, std::span<const ChatMessage> history, int round) const;

  /// Raw call with an arbitrary persona and pre-built turns.
  std::string complete(AgentRole role, std::vector<HistoryEntry> turns) const;

  const PersonaCatalog& personas() const { return personas_; }
  const HistoryLimits& limits() const { return limits_; }

 private:
  ChatMessage invoke(AgentRole role, std::span<const ChatMessage> history, int round) const;

  const PersonaCatalog& personas_;
  ChatProvider& provider_;
  HistoryLimits limits_;
};

}  // namespace codesign::agents
