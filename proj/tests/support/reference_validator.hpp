#pragma once

#include <string>
#include <vector>

#include "codesign/prompts/validator.hpp"

namespace codesign::testing {

/// Slow, regex-free re-implementation of the prompt grammar, written from
/// the rule text rather than from the production code. Used as an oracle.
prompts::ValidationResult reference_validate(const std::string& text, const prompts::ValidationContext& context);

}  // namespace codesign::testing
