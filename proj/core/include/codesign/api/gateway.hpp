#pragma once

#include <chrono>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "codesign/api/service.hpp"

namespace codesign::api {

struct ApiRequest {
  std::string method;
  std::string path;  // decoded, without query string
  std::map<std::string, std::string> query;
  std::map<std::string, std::string> headers;  // lower-case names
  std::string body;
};

struct ApiResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
  std::map<std::string, std::string> headers;

  nlohmann::json json() const { return nlohmann::json::parse(body); }
};

struct GatewayOptions {
  std::string cors_origin = "*";
  /// A claimed idempotency key whose request never finished (crash) is
  /// released after this long.
  std::chrono::milliseconds stale_claim{30'000};
};

/// Transport-independent router for the /v1 HTTP API.
///
///   GET  /v1/health
///   POST /v1/rooms/{room}/join                       {username}
///   POST /v1/rooms/{room}/ready                      {username, ready}
///   POST /v1/rooms/{room}/messages                   {username, content}
///   POST /v1/rooms/{room}/rounds                     {username, from_round?}
///   GET  /v1/rooms/{room}/state?since_seq=N
///   POST /v1/rooms/{room}/agents                     {role, phase}
///   POST /v1/rooms/{room}/agents/{role}/query        {username}
///   POST /v1/rooms/{room}/facilitation/{round}/retry {username}
///   POST /v1/rooms/{room}/snapshots                  {username, view}
///   GET  /v1/rooms/{room}/snapshots
///   POST /v1/rooms/{room}/prompt-sets                {username}
///   GET  /v1/rooms/{room}/prompt-sets
///   GET  /v1/prompt-sets/{id}
///   POST /v1/prompt-sets/{id}/edits                  {edits: [{action, index?, text?}]}
///   POST /v1/rooms/{room}/images                     {username, prompt_set_id, source_id?}
///   GET  /v1/rooms/{room}/artifacts
///   GET  /v1/artifacts/{id}                          image/png
///   GET  /v1/artifacts/{id}/meta
///   POST /v1/rooms/{room}/end                        {username}
///   GET  /v1/rooms/{room}/export                     application/zip
///
/// POSTs carrying an Idempotency-Key header run at most once per
/// (method, path, key); repeats get the recorded response back. The
/// records live in the shared store, so any instance can answer a retry.
class Gateway {
 public:
  explicit Gateway(Service& service, GatewayOptions options = {});

  ApiResponse handle(const ApiRequest& request);

 private:
  ApiResponse dispatch(const ApiRequest& request);
  ApiResponse handle_idempotent(const ApiRequest& request, const std::string& key);

  Service& service_;
  GatewayOptions options_;
};

}  // namespace codesign::api
