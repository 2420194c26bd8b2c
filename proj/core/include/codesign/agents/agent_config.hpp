#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>

#include "codesign/model/roles.hpp"

namespace codesign::agents {

/// Sampling parameters passed to a chat provider.
struct GenerationParams {
  int max_output_tokens = 1024;
  double temperature = 0.35;
  double nucleus_threshold = 0.9;  // top-p

  friend bool operator==(const GenerationParams&, const GenerationParams&) = default;
};

/// Facilitation and prompt parsing run conservative (1024, 0.35, 0.9);
/// the expert personas run more exploratory (1024, 0.85, 0.95).
GenerationParams default_params(AgentRole role) noexcept;

struct AgentConfig {
  AgentRole agent_role = AgentRole::Facilitator;
  std::string system_prompt;
  GenerationParams params;
};

/// Resource file name of a persona's system prompt, e.g. "facilitator.txt".
std::string_view prompt_file_name(AgentRole role) noexcept;

/// The four persona configurations, immutable after construction.
class PersonaCatalog {
 public:
  /// Prompts compiled into the library from core/resources/prompts.
  static PersonaCatalog builtin();

  /// Loads `<dir>/<role>.txt` for every role (one trailing newline is
  /// stripped). Throws ConfigError naming the missing or unreadable file.
  static PersonaCatalog load_directory(const std::filesystem::path& dir);

  const AgentConfig& config(AgentRole role) const;
  const std::string& render_system_prompt(AgentRole role) const { return config(role).system_prompt; }

  /// SHA-256 hex of the system prompt bytes.
  std::string checksum(AgentRole role) const;

 private:
  PersonaCatalog() = default;
  std::array<AgentConfig, 4> configs_;
};

/// Fixed instruction prepended to every image-revision request.
std::string_view revision_instruction() noexcept;

}  // namespace codesign::agents
