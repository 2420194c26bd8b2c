#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "codesign/agents/agent_invoker.hpp"
#include "codesign/session/session_service.hpp"
#include "codesign/store/transaction.hpp"

namespace codesign::api {

enum class StoreBackend { Memory, File };
enum class ProviderMode { Mock, Live };

struct ProviderConfig {
  ProviderMode mode = ProviderMode::Mock;
  std::string endpoint;
  std::string api_key;  // environment only
};

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  StoreBackend store = StoreBackend::Memory;
  std::filesystem::path store_dir;
  ProviderConfig chat;
  ProviderConfig scene;
  ProviderConfig image;
  std::optional<std::filesystem::path> prompt_dir;  // overrides the built-in persona prompts
  std::string cors_origin = "*";
  int threads = 8;
  session::SessionLimits session_limits;
  agents::HistoryLimits history_limits;
  store::RetryPolicy retry;
};

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

/// getenv-backed lookup.
EnvLookup process_environment();

/// Resolves configuration from flags (highest precedence), then
/// CODESIGN_* environment variables, then defaults. Credentials are read
/// from the environment only. Rejects invalid combinations and probes the
/// file store directory for writability; failures throw ConfigError naming
/// the flag or variable at fault.
///
///   flag                     environment
///   --host                   CODESIGN_HOST
///   --port                   CODESIGN_PORT
///   --store memory|file      CODESIGN_STORE
///   --store-dir              CODESIGN_STORE_DIR
///   --chat-provider mock|live   CODESIGN_CHAT_PROVIDER   (+ CODESIGN_CHAT_ENDPOINT, CODESIGN_CHAT_API_KEY)
///   --scene-provider mock|live  CODESIGN_SCENE_PROVIDER  (+ CODESIGN_SCENE_ENDPOINT, CODESIGN_SCENE_API_KEY)
///   --image-provider mock|live  CODESIGN_IMAGE_PROVIDER  (+ CODESIGN_IMAGE_ENDPOINT, CODESIGN_IMAGE_API_KEY)
///   --prompt-dir             CODESIGN_PROMPT_DIR
///   --cors-origin            CODESIGN_CORS_ORIGIN
///   --threads                CODESIGN_THREADS
///   --max-participants       CODESIGN_MAX_PARTICIPANTS
///   --history-max-messages   CODESIGN_HISTORY_MAX_MESSAGES
///   --history-max-chars      CODESIGN_HISTORY_MAX_CHARS
///   --retry-attempts         CODESIGN_RETRY_ATTEMPTS
ServiceConfig load_config(const std::vector<std::string>& args, const EnvLookup& env = process_environment());

}  // namespace codesign::api
