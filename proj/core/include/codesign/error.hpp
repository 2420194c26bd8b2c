#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace codesign {

/// Stable machine-readable error identifiers. The names double as the
/// `code` strings of the HTTP API, so renaming one is a breaking change.
enum class ErrorCode {
  // validation
  InvalidArgument,
  EmptyContent,
  EmptyText,
  EmptyHistory,
  EmptyPromptSet,
  InvalidViewParams,
  InvalidRole,
  InvalidPhase,
  IndexOutOfRange,
  // lookup
  UnknownRoom,
  UnknownUser,
  UnknownPromptSet,
  UnknownArtifact,
  NoSourceImage,
  // state conflicts
  DuplicateUsername,
  RoomFull,
  RoomClosed,
  NotInLobby,
  RoomNotActive,
  AlreadyRegistered,
  AgentNotActive,
  FacilitationNotRetryable,
  IdempotencyMismatch,
  RequestInFlight,
  // providers
  ProviderError,
  SceneProviderError,
  ImageProviderError,
  // storage
  ConflictExhausted,
  StorageError,
  // startup
  ConfigError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Startup configuration failure; `key()` names the offending flag or
/// environment variable.
class ConfigError : public Error {
 public:
  ConfigError(std::string key, const std::string& message)
      : Error(ErrorCode::ConfigError, key + ": " + message), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

}  // namespace codesign
