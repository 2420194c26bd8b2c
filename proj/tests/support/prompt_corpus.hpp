#pragma once

#include <optional>
#include <string>
#include <vector>

#include "codesign/prompts/validator.hpp"

namespace codesign::testing {

struct CorpusCase {
  std::string label;
  std::string text;
  prompts::ValidationContext context;
  std::vector<Violation> expected;  // in check order
  std::optional<std::size_t> expected_words;
};

/// Room facts shared by most corpus cases.
prompts::ValidationContext corpus_room();

/// Hand-written and generated grammar cases covering every violation class.
std::vector<CorpusCase> prompt_corpus();

}  // namespace codesign::testing
