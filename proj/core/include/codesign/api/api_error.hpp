#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "codesign/error.hpp"

namespace codesign::api {

/// Wire form of a failure: {"error": {"code", "message", "retryable"}}.
struct ApiError {
  std::string code;  // the ErrorCode name
  std::string message;
  bool retryable = false;
  int status = 500;
};

int http_status(ErrorCode code) noexcept;
bool is_retryable(ErrorCode code) noexcept;

ApiError to_api_error(const Error& error);
/// Malformed requests and unexpected exceptions.
ApiError bad_request(const std::string& message);
ApiError internal_error(const std::string& message);

nlohmann::json error_body(const ApiError& error);

}  // namespace codesign::api
