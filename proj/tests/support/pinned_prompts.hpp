#pragma once

#include <string>
#include <string_view>

#include "codesign/model/roles.hpp"

namespace codesign::testing {

// sha256 of each persona prompt file minus its trailing newline, taken with
// sha256sum when the texts were transcribed.
inline constexpr std::string_view kFacilitatorSha = "13498a4118897e40a3cad5a9823ef07395eb52ab57e13f048d89c651fca808f9";
inline constexpr std::string_view kDesignerSha = "2d3b4a205b01348806a63d6e06826f1f9eed4b67618136d69a1d284cda083567";
inline constexpr std::string_view kPlannerSha = "bf558a0ba81d8a8f1a4e63d31d7f8062f33f2ac3da87c66a674f3e2abbd90d98";
inline constexpr std::string_view kPromptParserSha = "68ee4fc629f762f2adeb7f7d17d2028c8751d14a705e88b934f4b1c3c1419ad5";
inline constexpr std::string_view kRevisionSha = "1ceba20fdeb3ffda16587ab91c4b6e14d9b391a55e318cfe3c38885a65d48ca3";

inline std::string_view pinned_sha(AgentRole role) {
  switch (role) {
    case AgentRole::Facilitator: return kFacilitatorSha;
    case AgentRole::Designer: return kDesignerSha;
    case AgentRole::Planner: return kPlannerSha;
    case AgentRole::PromptParser: return kPromptParserSha;
  }
  return {};
}

/// SHA-256 hex computed with OpenSSL directly, independent of the
/// library's digest helpers.
std::string openssl_sha256(std::string_view text);

}  // namespace codesign::testing
