#include "codesign/agents/agent_config.hpp"

#include <fstream>
#include <iterator>

#include "codesign/error.hpp"
#include "codesign/resources.hpp"
#include "codesign/util/digest.hpp"

namespace codesign::agents {
namespace {

constexpr std::array kRoles = {AgentRole::Facilitator, AgentRole::Designer, AgentRole::Planner,
                               AgentRole::PromptParser};

std::size_t index_of(AgentRole role) {
  switch (role) {
    case AgentRole::Facilitator: return 0;
    case AgentRole::Designer: return 1;
    case AgentRole::Planner: return 2;
    case AgentRole::PromptParser: return 3;
  }
  throw Error(ErrorCode::InvalidRole, "unknown agent role");
}

std::string_view builtin_prompt(AgentRole role) {
  switch (role) {
    case AgentRole::Facilitator: return resources::kFacilitatorPrompt;
    case AgentRole::Designer: return resources::kDesignerPrompt;
    case AgentRole::Planner: return resources::kPlannerPrompt;
    case AgentRole::PromptParser: return resources::kPromptParserPrompt;
  }
  return {};
}

}  // namespace

GenerationParams default_params(AgentRole role) noexcept {
  switch (role) {
    case AgentRole::Designer:
    case AgentRole::Planner:
      return {1024, 0.85, 0.95};
    case AgentRole::Facilitator:
    case AgentRole::PromptParser:
      break;
  }
  return {1024, 0.35, 0.9};
}

std::string_view prompt_file_name(AgentRole role) noexcept {
  switch (role) {
    case AgentRole::Facilitator: return "facilitator.txt";
    case AgentRole::Designer: return "designer.txt";
    case AgentRole::Planner: return "planner.txt";
    case AgentRole::PromptParser: return "prompt_parser.txt";
  }
  return {};
}

PersonaCatalog PersonaCatalog::builtin() {
  PersonaCatalog catalog;
  for (auto role : kRoles) {
    catalog.configs_[index_of(role)] = {role, std::string(builtin_prompt(role)), default_params(role)};
  }
  return catalog;
}

PersonaCatalog PersonaCatalog::load_directory(const std::filesystem::path& dir) {
  PersonaCatalog catalog;
  for (auto role : kRoles) {
    const auto path = dir / prompt_file_name(role);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("prompt-dir", "cannot read " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (!text.empty() && text.back() == '\n') text.pop_back();
    if (text.empty()) throw ConfigError("prompt-dir", path.string() + " is empty");
    catalog.configs_[index_of(role)] = {role, std::move(text), default_params(role)};
  }
  return catalog;
}

const AgentConfig& PersonaCatalog::config(AgentRole role) const { return configs_[index_of(role)]; }

std::string PersonaCatalog::checksum(AgentRole role) const {
  return digest::sha256_hex(config(role).system_prompt);
}

std::string_view revision_instruction() noexcept { return resources::kRevisionInstruction; }

}  // namespace codesign::agents
