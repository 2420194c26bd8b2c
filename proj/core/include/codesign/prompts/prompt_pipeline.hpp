#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "codesign/agents/agent_invoker.hpp"
#include "codesign/model/prompt_set.hpp"
#include "codesign/prompts/segment.hpp"
#include "codesign/prompts/validator.hpp"
#include "codesign/session/session_service.hpp"

namespace codesign::prompts {

inline constexpr std::size_t kMinPrompts = 4;
inline constexpr std::size_t kMaxPrompts = 6;

/// Asks the prompt-parser persona for design prompts and keeps the lines
/// that pass validation, de-duplicated. Under-production triggers exactly
/// one re-request whose valid lines are merged in; still fewer than four
/// marks the result degraded. More than six keeps the first six. Only
/// `items`, `source_segment` and `degraded` are filled in.
PromptSet extract_prompts(const SegmentDocument& segment, const agents::AgentInvoker& invoker,
                          const ValidationContext& context);

enum class EditAction { Edit, Remove, Append };

NLOHMANN_JSON_SERIALIZE_ENUM(EditAction, {
    {EditAction::Edit, "Edit"},
    {EditAction::Remove, "Remove"},
    {EditAction::Append, "Append"},
})

struct PromptEdit {
  EditAction action = EditAction::Append;
  std::optional<std::size_t> index;
  std::optional<std::string> text;
};

void from_json(const nlohmann::json& j, PromptEdit& edit);

/// Applies edits in order, re-validating touched items. Non-conforming
/// user text is kept with valid = false. Duplicates are removed afterwards
/// (first occurrence wins). Pure: equal inputs give equal results.
PromptSet apply_edits(PromptSet base, std::span<const PromptEdit> edits, const ValidationContext& context);

/// Room-bound prompt workflow: generation from the discussion, editing and
/// lookup. Prompt sets live at prompt_sets/<id>.
class PromptPipeline {
 public:
  PromptPipeline(session::SessionService& sessions, const agents::AgentInvoker& invoker);

  PromptSet generate(const std::string& room_id, std::string_view username);
  PromptSet edit_prompt_set(const std::string& prompt_set_id, std::span<const PromptEdit> edits);
  PromptSet get(const std::string& prompt_set_id) const;
  std::vector<PromptSet> list(const std::string& room_id) const;

  /// Usernames, panorama ids and user message texts of a room.
  ValidationContext context_for(const std::string& room_id) const;

 private:
  session::SessionService& sessions_;
  const agents::AgentInvoker& invoker_;
};

}  // namespace codesign::prompts
