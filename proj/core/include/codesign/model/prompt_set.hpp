#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "codesign/clock.hpp"

namespace codesign {

enum class PromptOrigin { Extracted, UserAdded, UserEdited };

enum class Violation { NoStrongVerb, TooShort, TooLong, MetadataLeak, TranscriptCopy };

NLOHMANN_JSON_SERIALIZE_ENUM(PromptOrigin, {
    {PromptOrigin::Extracted, "Extracted"},
    {PromptOrigin::UserAdded, "UserAdded"},
    {PromptOrigin::UserEdited, "UserEdited"},
})

NLOHMANN_JSON_SERIALIZE_ENUM(Violation, {
    {Violation::NoStrongVerb, "NoStrongVerb"},
    {Violation::TooShort, "TooShort"},
    {Violation::TooLong, "TooLong"},
    {Violation::MetadataLeak, "MetadataLeak"},
    {Violation::TranscriptCopy, "TranscriptCopy"},
})

struct PromptItem {
  std::string text;
  PromptOrigin origin = PromptOrigin::Extracted;
  bool valid = true;
  std::vector<Violation> violations;

  friend bool operator==(const PromptItem&, const PromptItem&) = default;
};

struct PromptSet {
  std::string prompt_set_id;
  std::string room_id;
  std::string source_segment;
  std::vector<PromptItem> items;
  int created_round = 1;
  bool degraded = false;
  TimestampMs created_at_ms = 0;

  friend bool operator==(const PromptSet&, const PromptSet&) = default;
};

void to_json(nlohmann::json& j, const PromptItem& p);
void from_json(const nlohmann::json& j, PromptItem& p);
void to_json(nlohmann::json& j, const PromptSet& p);
void from_json(const nlohmann::json& j, PromptSet& p);

}  // namespace codesign
