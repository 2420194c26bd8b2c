#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "codesign/api/gateway.hpp"
#include "codesign/api/service.hpp"

namespace codesign::testing {

/// Sends a request through the gateway and returns the parsed JSON body.
/// Throws std::runtime_error on a non-2xx status.
nlohmann::json call(api::Gateway& gateway, const std::string& method, const std::string& path,
                    const nlohmann::json& body = nlohmann::json::object());

/// Outcome of the scripted street-redesign workshop.
struct ScenarioRun {
  std::string room_id;
  std::string snapshot_id;
  std::string prompt_set_id;
  std::string first_revision;
  std::string second_revision;
  std::vector<std::uint8_t> archive;
};

/// Two residents and an AI planner, driven over the HTTP gateway on mock
/// providers: join, ready, snapshot, two suggestions with a planner query
/// in between, synthesis, prompt extraction and edit, two revisions, end,
/// export.
ScenarioRun run_street_scenario();

}  // namespace codesign::testing
