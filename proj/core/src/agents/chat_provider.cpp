#include "codesign/agents/chat_provider.hpp"

#include "codesign/util/canonical_json.hpp"

namespace codesign::agents {

std::string canonical_request(const CompletionRequest& request) {
  nlohmann::json messages = nlohmann::json::array();
  for (const auto& turn : request.history) messages.push_back({{"label", turn.label}, {"content", turn.content}});
  return canonical_dump({{"system", request.system_prompt},
                         {"messages", std::move(messages)},
                         {"max_output_tokens", request.params.max_output_tokens},
                         {"temperature", request.params.temperature},
                         {"top_p", request.params.nucleus_threshold}});
}

}  // namespace codesign::agents
