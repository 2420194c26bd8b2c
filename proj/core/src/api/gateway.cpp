#include "codesign/api/gateway.hpp"

#include <charconv>
#include <vector>

#include "codesign/api/api_error.hpp"
#include "codesign/exporter/export_bundle.hpp"
#include "codesign/util/canonical_json.hpp"
#include "codesign/util/digest.hpp"
#include "codesign/util/text.hpp"

namespace codesign::api {
namespace {

using nlohmann::json;

ApiResponse json_response(const json& body, int status = 200) {
  ApiResponse r;
  r.status = status;
  r.body = body.dump();
  return r;
}

ApiResponse error_response(const ApiError& error) { return json_response(error_body(error), error.status); }

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= path.size()) {
    auto end = path.find('/', start);
    if (end == std::string::npos) end = path.size();
    if (end > start) parts.push_back(path.substr(start, end - start));
    start = end + 1;
  }
  return parts;
}

// Request field accessors; any shape problem is the client's fault.
[[noreturn]] void invalid(const std::string& message) { throw Error(ErrorCode::InvalidArgument, message); }

json parse_body(const std::string& body) {
  if (text::trim(body).empty()) return json::object();
  auto j = json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) invalid("request body must be a JSON object");
  return j;
}

std::string require_string(const json& body, const char* field) {
  auto it = body.find(field);
  if (it == body.end() || !it->is_string()) invalid(std::string("'") + field + "' must be a string");
  return it->get<std::string>();
}

std::optional<std::string> optional_string(const json& body, const char* field) {
  auto it = body.find(field);
  if (it == body.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) invalid(std::string("'") + field + "' must be a string");
  return it->get<std::string>();
}

std::optional<std::int64_t> optional_int(const json& body, const char* field) {
  auto it = body.find(field);
  if (it == body.end() || it->is_null()) return std::nullopt;
  if (!it->is_number_integer()) invalid(std::string("'") + field + "' must be an integer");
  return it->get<std::int64_t>();
}

double require_number(const json& obj, const char* field) {
  auto it = obj.find(field);
  if (it == obj.end() || !it->is_number()) invalid(std::string("'") + field + "' must be a number");
  return it->get<double>();
}

std::int64_t parse_int(const std::string& s, const char* what) {
  std::int64_t v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) invalid(std::string("'") + what + "' must be an integer");
  return v;
}

AgentRole parse_role(const std::string& name) {
  for (auto role : {AgentRole::Facilitator, AgentRole::Designer, AgentRole::Planner, AgentRole::PromptParser}) {
    if (text::ascii_lower(to_string(role)) == text::ascii_lower(name)) return role;
  }
  throw Error(ErrorCode::InvalidRole, "unknown agent role '" + name + "'");
}

agents::RegistrationPhase parse_phase(const std::string& name) {
  if (name == "AtCreation") return agents::RegistrationPhase::AtCreation;
  if (name == "MidSession") return agents::RegistrationPhase::MidSession;
  throw Error(ErrorCode::InvalidPhase, "unknown registration phase '" + name + "'");
}

ViewParams parse_view(const json& body) {
  auto it = body.find("view");
  if (it == body.end() || !it->is_object()) invalid("'view' must be an object");
  ViewParams v;
  v.panorama_id = require_string(*it, "panorama_id");
  v.heading = require_number(*it, "heading");
  v.pitch = require_number(*it, "pitch");
  v.fov = require_number(*it, "fov");
  v.latitude = require_number(*it, "lat");
  v.longitude = require_number(*it, "lon");
  return v;
}

std::vector<prompts::PromptEdit> parse_edits(const json& body) {
  auto it = body.find("edits");
  if (it == body.end() || !it->is_array()) invalid("'edits' must be an array");
  std::vector<prompts::PromptEdit> edits;
  for (const auto& e : *it) {
    if (!e.is_object()) invalid("each edit must be an object");
    const std::string action = require_string(e, "action");
    prompts::PromptEdit edit;
    if (action == "Edit") {
      edit.action = prompts::EditAction::Edit;
    } else if (action == "Remove") {
      edit.action = prompts::EditAction::Remove;
    } else if (action == "Append") {
      edit.action = prompts::EditAction::Append;
    } else {
      invalid("unknown edit action '" + action + "'");
    }
    if (auto index = optional_int(e, "index")) {
      if (*index < 0) throw Error(ErrorCode::IndexOutOfRange, "index must be non-negative");
      edit.index = static_cast<std::size_t>(*index);
    }
    edit.text = optional_string(e, "text");
    edits.push_back(std::move(edit));
  }
  return edits;
}

json optional_json(const auto& value) { return value ? json(*value) : json(nullptr); }

json to_wire(const session::PostOutcome& o) {
  return {{"message", o.stored_message},
          {"round_completed", o.round_completed},
          {"facilitator_reply", optional_json(o.facilitator_reply)},
          {"new_round", optional_json(o.new_round)},
          {"facilitator_error", optional_json(o.facilitator_error)}};
}

json to_wire(const session::RoomDelta& d) {
  return {{"room", d.room}, {"messages", d.messages}, {"artifacts", d.artifacts}, {"last_seq", d.room.next_seq}};
}

json to_wire(const session::FacilitationOutcome& o) {
  return {{"round", o.round}, {"reply", optional_json(o.reply)}, {"error", optional_json(o.error)}};
}

std::int64_t now_ms() {
  using namespace std::chrono;
  return duration_cast<milliseconds>(system_clock::now().time_since_epoch()).count();
}

bool is_mutation(const std::string& method) { return method == "POST" || method == "PUT" || method == "PATCH"; }

}  // namespace

Gateway::Gateway(Service& service, GatewayOptions options) : service_(service), options_(std::move(options)) {}

ApiResponse Gateway::handle(const ApiRequest& request) {
  ApiResponse response;
  if (request.method == "OPTIONS") {
    response.status = 204;
    response.content_type.clear();
    response.headers["Access-Control-Allow-Methods"] = "GET, POST, OPTIONS";
    response.headers["Access-Control-Allow-Headers"] = "Content-Type, Idempotency-Key";
    response.headers["Access-Control-Max-Age"] = "600";
  } else {
    auto key = request.headers.find("idempotency-key");
    if (is_mutation(request.method) && key != request.headers.end() && !key->second.empty()) {
      response = handle_idempotent(request, key->second);
    } else {
      response = dispatch(request);
    }
  }
  response.headers["Access-Control-Allow-Origin"] = options_.cors_origin;
  response.headers["Access-Control-Expose-Headers"] = "Idempotent-Replayed";
  return response;
}

ApiResponse Gateway::handle_idempotent(const ApiRequest& request, const std::string& key) {
  const std::string record_key =
      "idempotency/" + digest::sha256_hex(request.method + " " + request.path + "\n" + key);
  const std::string fingerprint = digest::sha256_hex(request.body);

  enum class Claim { Claimed, Replay, InFlight, Mismatch };
  json recorded;
  Claim claim;
  try {
    claim = store::run_transaction(service_.store(), [&](store::Transaction& tx) {
      auto existing = tx.read(record_key);
      const auto now = now_ms();
      if (existing && existing->value("state", "") != "released") {
        if (existing->value("fingerprint", "") != fingerprint) return Claim::Mismatch;
        if (existing->value("state", "") == "done") {
          recorded = *existing;
          return Claim::Replay;
        }
        if (now - existing->value("claimed_at_ms", std::int64_t{0}) < options_.stale_claim.count()) {
          return Claim::InFlight;
        }
      }
      tx.write(record_key, {{"state", "pending"}, {"fingerprint", fingerprint}, {"claimed_at_ms", now}});
      return Claim::Claimed;
    });
  } catch (const Error& e) {
    return error_response(to_api_error(e));
  }

  switch (claim) {
    case Claim::Mismatch:
      return error_response(to_api_error(
          Error(ErrorCode::IdempotencyMismatch, "Idempotency-Key '" + key + "' was used with a different body")));
    case Claim::InFlight:
      return error_response(
          to_api_error(Error(ErrorCode::RequestInFlight, "request '" + key + "' is still being processed")));
    case Claim::Replay: {
      ApiResponse r;
      r.status = recorded.at("status").get<int>();
      r.content_type = recorded.at("content_type").get<std::string>();
      r.body = recorded.at("body").get<std::string>();
      r.headers["Idempotent-Replayed"] = "true";
      return r;
    }
    case Claim::Claimed:
      break;
  }

  ApiResponse response = dispatch(request);
  json outcome = response.status >= 500
                     ? json{{"state", "released"}}
                     : json{{"state", "done"},
                            {"fingerprint", fingerprint},
                            {"status", response.status},
                            {"content_type", response.content_type},
                            {"body", response.body}};
  try {
    store::run_transaction(service_.store(), [&](store::Transaction& tx) { tx.write(record_key, outcome); });
  } catch (const Error&) {
    // The claim goes stale and a retry re-runs the request; the original
    // response is still the truthful one to return.
  }
  return response;
}

ApiResponse Gateway::dispatch(const ApiRequest& request) {
  try {
    const auto p = split_path(request.path);
    const auto& m = request.method;
    if (p.empty() || p[0] != "v1") {
      return error_response({"UnknownRoute", "no route for " + request.path, false, 404});
    }
    const json body = is_mutation(m) ? parse_body(request.body) : json::object();
    auto& sessions = service_.sessions();

    if (p.size() == 2 && p[1] == "health" && m == "GET") return json_response({{"status", "ok"}});

    if (p.size() >= 3 && p[1] == "rooms") {
      const std::string& room = p[2];
      if (p.size() == 4) {
        const std::string& action = p[3];
        if (m == "POST" && action == "join") {
          return json_response(sessions.create_or_join_room(require_string(body, "username"), room));
        }
        if (m == "POST" && action == "ready") {
          bool ready = true;
          if (auto it = body.find("ready"); it != body.end()) {
            if (!it->is_boolean()) invalid("'ready' must be a boolean");
            ready = it->get<bool>();
          }
          return json_response(sessions.set_ready(room, require_string(body, "username"), ready));
        }
        if (m == "POST" && action == "messages") {
          return json_response(
              to_wire(sessions.post_message(room, require_string(body, "username"), require_string(body, "content"))));
        }
        if (m == "POST" && action == "rounds") {
          std::optional<int> from_round;
          if (auto r = optional_int(body, "from_round")) from_round = static_cast<int>(*r);
          auto advance = sessions.start_new_round(room, require_string(body, "username"), from_round);
          return json_response({{"room", advance.room}, {"advanced", advance.advanced}});
        }
        if (m == "GET" && action == "state") {
          std::int64_t since = 0;
          if (auto it = request.query.find("since_seq"); it != request.query.end()) {
            since = parse_int(it->second, "since_seq");
          }
          return json_response(to_wire(sessions.get_room_state(room, since)));
        }
        if (m == "POST" && action == "agents") {
          const auto role = parse_role(require_string(body, "role"));
          const auto phase = parse_phase(require_string(body, "phase"));
          return json_response(service_.experts().register_expert(room, role, phase));
        }
        if (action == "snapshots") {
          if (m == "POST") {
            return json_response(
                service_.studio().save_snapshot(room, require_string(body, "username"), parse_view(body)));
          }
          if (m == "GET") return json_response(service_.studio().list_snapshots(room));
        }
        if (action == "prompt-sets") {
          if (m == "POST") return json_response(service_.prompts().generate(room, require_string(body, "username")));
          if (m == "GET") return json_response(service_.prompts().list(room));
        }
        if (m == "POST" && action == "images") {
          return json_response(service_.studio().revise_image(room, require_string(body, "username"),
                                                              require_string(body, "prompt_set_id"),
                                                              optional_string(body, "source_id")));
        }
        if (m == "GET" && action == "artifacts") return json_response(service_.studio().list_artifacts(room));
        if (m == "POST" && action == "end") {
          return json_response(sessions.end_session(room, require_string(body, "username")));
        }
        if (m == "GET" && action == "export") {
          const auto bytes = exporter::serialize_bundle(exporter::export_session(service_.store(), room));
          ApiResponse r;
          r.content_type = "application/zip";
          r.body.assign(bytes.begin(), bytes.end());
          r.headers["Content-Disposition"] = "attachment; filename=\"session-export.zip\"";
          return r;
        }
      }
      if (p.size() == 6 && p[3] == "agents" && p[5] == "query" && m == "POST") {
        return json_response(service_.experts().query_expert(room, parse_role(p[4]), require_string(body, "username")));
      }
      if (p.size() == 6 && p[3] == "facilitation" && p[5] == "retry" && m == "POST") {
        const auto round = static_cast<int>(parse_int(p[4], "round"));
        return json_response(to_wire(sessions.retry_facilitator(room, require_string(body, "username"), round)));
      }
    }

    if (p.size() >= 3 && p[1] == "prompt-sets") {
      if (p.size() == 3 && m == "GET") return json_response(service_.prompts().get(p[2]));
      if (p.size() == 4 && p[3] == "edits" && m == "POST") {
        return json_response(service_.prompts().edit_prompt_set(p[2], parse_edits(body)));
      }
    }

    if (p.size() >= 3 && p[1] == "artifacts" && m == "GET") {
      if (p.size() == 3) {
        const auto bytes = service_.studio().artifact_bytes(p[2]);
        ApiResponse r;
        r.content_type = "image/png";
        r.body.assign(bytes.begin(), bytes.end());
        return r;
      }
      if (p.size() == 4 && p[3] == "meta") return json_response(service_.studio().artifact(p[2]));
    }

    return error_response({"UnknownRoute", "no route for " + m + " " + request.path, false, 404});
  } catch (const Error& e) {
    return error_response(to_api_error(e));
  } catch (const json::exception& e) {
    return error_response(internal_error(std::string("document decoding failed: ") + e.what()));
  } catch (const std::exception& e) {
    return error_response(internal_error(e.what()));
  }
}

}  // namespace codesign::api
