#include <httplib.h>

#include "codesign/agents/chat_provider.hpp"
#include "codesign/error.hpp"
#include "util/url.hpp"

namespace codesign::agents {

using detail::split_url;

HttpChatProvider::HttpChatProvider(std::string endpoint, std::string api_key, std::chrono::milliseconds timeout)
    : endpoint_(std::move(endpoint)), api_key_(std::move(api_key)), timeout_(timeout) {}

std::string HttpChatProvider::complete(const CompletionRequest& request) {
  if (api_key_.empty()) throw Error(ErrorCode::ProviderError, "chat provider has no credential");
  const auto url = split_url(endpoint_);
  httplib::Client client(url.origin);
  if (!client.is_valid()) throw Error(ErrorCode::ProviderError, "unsupported chat endpoint " + endpoint_);
  client.set_connection_timeout(timeout_);
  client.set_read_timeout(timeout_);
  client.set_bearer_token_auth(api_key_);
  auto res = client.Post(url.path, canonical_request(request), "application/json");
  if (!res) {
    throw Error(ErrorCode::ProviderError, "chat endpoint unreachable: " + httplib::to_string(res.error()));
  }
  if (res->status / 100 != 2) {
    throw Error(ErrorCode::ProviderError, "chat endpoint returned HTTP " + std::to_string(res->status));
  }
  auto body = nlohmann::json::parse(res->body, nullptr, false);
  if (body.is_discarded() || !body.contains("text") || !body["text"].is_string()) {
    throw Error(ErrorCode::ProviderError, "chat endpoint returned a malformed body");
  }
  return body["text"].get<std::string>();
}

}  // namespace codesign::agents
