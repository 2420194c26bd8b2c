#include "codesign/error.hpp"

namespace codesign {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EmptyContent: return "EmptyContent";
    case ErrorCode::EmptyText: return "EmptyText";
    case ErrorCode::EmptyHistory: return "EmptyHistory";
    case ErrorCode::EmptyPromptSet: return "EmptyPromptSet";
    case ErrorCode::InvalidViewParams: return "InvalidViewParams";
    case ErrorCode::InvalidRole: return "InvalidRole";
    case ErrorCode::InvalidPhase: return "InvalidPhase";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::UnknownRoom: return "UnknownRoom";
    case ErrorCode::UnknownUser: return "UnknownUser";
    case ErrorCode::UnknownPromptSet: return "UnknownPromptSet";
    case ErrorCode::UnknownArtifact: return "UnknownArtifact";
    case ErrorCode::NoSourceImage: return "NoSourceImage";
    case ErrorCode::DuplicateUsername: return "DuplicateUsername";
    case ErrorCode::RoomFull: return "RoomFull";
    case ErrorCode::RoomClosed: return "RoomClosed";
    case ErrorCode::NotInLobby: return "NotInLobby";
    case ErrorCode::RoomNotActive: return "RoomNotActive";
    case ErrorCode::AlreadyRegistered: return "AlreadyRegistered";
    case ErrorCode::AgentNotActive: return "AgentNotActive";
    case ErrorCode::FacilitationNotRetryable: return "FacilitationNotRetryable";
    case ErrorCode::IdempotencyMismatch: return "IdempotencyMismatch";
    case ErrorCode::RequestInFlight: return "RequestInFlight";
    case ErrorCode::ProviderError: return "ProviderError";
    case ErrorCode::SceneProviderError: return "SceneProviderError";
    case ErrorCode::ImageProviderError: return "ImageProviderError";
    case ErrorCode::ConflictExhausted: return "ConflictExhausted";
    case ErrorCode::StorageError: return "StorageError";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace codesign
