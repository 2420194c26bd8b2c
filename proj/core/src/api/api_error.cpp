#include "codesign/api/api_error.hpp"

namespace codesign::api {

int http_status(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::EmptyContent:
    case ErrorCode::EmptyText:
    case ErrorCode::EmptyHistory:
    case ErrorCode::EmptyPromptSet:
    case ErrorCode::InvalidViewParams:
    case ErrorCode::InvalidRole:
    case ErrorCode::InvalidPhase:
    case ErrorCode::IndexOutOfRange:
      return 400;
    case ErrorCode::UnknownUser:
      return 403;
    case ErrorCode::UnknownRoom:
    case ErrorCode::UnknownPromptSet:
    case ErrorCode::UnknownArtifact:
      return 404;
    case ErrorCode::NoSourceImage:
    case ErrorCode::DuplicateUsername:
    case ErrorCode::RoomFull:
    case ErrorCode::RoomClosed:
    case ErrorCode::NotInLobby:
    case ErrorCode::RoomNotActive:
    case ErrorCode::AlreadyRegistered:
    case ErrorCode::AgentNotActive:
    case ErrorCode::FacilitationNotRetryable:
    case ErrorCode::RequestInFlight:
      return 409;
    case ErrorCode::IdempotencyMismatch:
      return 422;
    case ErrorCode::ProviderError:
    case ErrorCode::SceneProviderError:
    case ErrorCode::ImageProviderError:
      return 502;
    case ErrorCode::ConflictExhausted:
      return 503;
    case ErrorCode::StorageError:
    case ErrorCode::ConfigError:
      return 500;
  }
  return 500;
}

bool is_retryable(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::RequestInFlight:
    case ErrorCode::ProviderError:
    case ErrorCode::SceneProviderError:
    case ErrorCode::ImageProviderError:
    case ErrorCode::ConflictExhausted:
    case ErrorCode::StorageError:
      return true;
    default:
      return false;
  }
}

ApiError to_api_error(const Error& error) {
  return {std::string(to_string(error.code())), error.what(), is_retryable(error.code()), http_status(error.code())};
}

ApiError bad_request(const std::string& message) {
  return {std::string(to_string(ErrorCode::InvalidArgument)), message, false, 400};
}

ApiError internal_error(const std::string& message) {
  return {"InternalError", message, true, 500};
}

nlohmann::json error_body(const ApiError& error) {
  return {{"error", {{"code", error.code}, {"message", error.message}, {"retryable", error.retryable}}}};
}

}  // namespace codesign::api
