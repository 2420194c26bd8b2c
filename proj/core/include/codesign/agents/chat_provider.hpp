#pragma once

#include <chrono>
#include <mutex>
#include <string>
#include <vector>

#include "codesign/agents/agent_config.hpp"

namespace codesign::agents {

/// One speaker turn in a provider request. `label` is the username for
/// human turns and "AI Facilitator" / "AI Designer" / "AI Planner" /
/// "System" otherwise.
struct HistoryEntry {
  std::string label;
  std::string content;

  friend bool operator==(const HistoryEntry&, const HistoryEntry&) = default;
};

struct CompletionRequest {
  std::string system_prompt;
  std::vector<HistoryEntry> history;  // seq order
  GenerationParams params;

  friend bool operator==(const CompletionRequest&, const CompletionRequest&) = default;
};

/// Canonical JSON encoding of a request; the mock digests these bytes and
/// live adapters send them as the request body.
std::string canonical_request(const CompletionRequest& request);

/// Chat-completion backend. Implementations throw Error(ProviderError) on
/// timeouts, rejections or empty output.
class ChatProvider {
 public:
  virtual ~ChatProvider() = default;
  virtual std::string complete(const CompletionRequest& request) = 0;
};

/// Offline provider whose output is a pure function of the request.
///
/// Replies are rendered from templates seeded by the SHA-256 of the
/// canonical request, so any change to prompt, history or parameters
/// changes the reply. The persona is recognized from the system prompt:
/// prompt-parser requests yield 5 grammar-conforming design prompts chosen
/// by keyword overlap with the segment. Every request is recorded.
class MockChatProvider final : public ChatProvider {
 public:
  std::string complete(const CompletionRequest& request) override;

  std::vector<CompletionRequest> recorded() const;
  std::size_t call_count() const;
  void clear();

 private:
  mutable std::mutex mutex_;
  std::vector<CompletionRequest> recorded_;
};

/// Adapter for an HTTP JSON completion endpoint. POSTs
/// {"system", "messages":[{"label","content"}], "max_output_tokens",
///  "temperature", "top_p"} with a bearer token and expects {"text": ...}.
class HttpChatProvider final : public ChatProvider {
 public:
  HttpChatProvider(std::string endpoint, std::string api_key,
                   std::chrono::milliseconds timeout = std::chrono::seconds(60));

  std::string complete(const CompletionRequest& request) override;

 private:
  std::string endpoint_;
  std::string api_key_;
  std::chrono::milliseconds timeout_;
};

}  // namespace codesign::agents
