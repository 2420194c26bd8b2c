#include <algorithm>

#include "codesign/model/message.hpp"
#include "codesign/model/prompt_set.hpp"
#include "codesign/model/room.hpp"
#include "codesign/model/scene.hpp"

namespace codesign {
namespace {

template <class T>
nlohmann::json optional_to_json(const std::optional<T>& value) {
  return value ? nlohmann::json(*value) : nlohmann::json(nullptr);
}

template <class T>
std::optional<T> optional_from_json(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->get<T>();
}

}  // namespace

// ---- messages ---------------------------------------------------------------

void to_json(nlohmann::json& j, const Attachment& a) { j = {{"kind", a.kind}, {"id", a.id}}; }

void from_json(const nlohmann::json& j, Attachment& a) {
  j.at("kind").get_to(a.kind);
  j.at("id").get_to(a.id);
}

void to_json(nlohmann::json& j, const ChatMessage& m) {
  j = {{"room_id", m.room_id},
       {"seq", m.seq},
       {"author", m.author},
       {"role", m.role},
       {"content", m.content},
       {"timestamp_ms", m.timestamp_ms},
       {"round_index", m.round_index},
       {"attachment", optional_to_json(m.attachment)}};
}

void from_json(const nlohmann::json& j, ChatMessage& m) {
  j.at("room_id").get_to(m.room_id);
  j.at("seq").get_to(m.seq);
  j.at("author").get_to(m.author);
  j.at("role").get_to(m.role);
  j.at("content").get_to(m.content);
  j.at("timestamp_ms").get_to(m.timestamp_ms);
  j.at("round_index").get_to(m.round_index);
  m.attachment = optional_from_json<Attachment>(j, "attachment");
}

// ---- rooms ------------------------------------------------------------------

bool RoomDocument::has_participant(const Username& name) const {
  return std::find(participants.begin(), participants.end(), name) != participants.end();
}

const AgentActivation* RoomDocument::find_agent(AgentRole role) const {
  for (const auto& a : agent_roster) {
    if (a.agent_role == role) return &a;
  }
  return nullptr;
}

void to_json(nlohmann::json& j, const AgentActivation& a) {
  j = {{"agent_role", a.agent_role}, {"activation_round", a.activation_round}};
}

void from_json(const nlohmann::json& j, AgentActivation& a) {
  j.at("agent_role").get_to(a.agent_role);
  j.at("activation_round").get_to(a.activation_round);
}

void to_json(nlohmann::json& j, const Facilitation& f) {
  j = {{"state", f.state}, {"through_seq", f.through_seq}};
}

void from_json(const nlohmann::json& j, Facilitation& f) {
  j.at("state").get_to(f.state);
  j.at("through_seq").get_to(f.through_seq);
}

void to_json(nlohmann::json& j, const RoomDocument& r) {
  nlohmann::json facilitation = nlohmann::json::object();
  for (const auto& [round, f] : r.facilitation) facilitation[std::to_string(round)] = f;
  j = {{"room_id", r.room_id},
       {"participants", r.participants},
       {"readiness", r.readiness},
       {"status", r.status},
       {"current_round", r.current_round},
       {"responded_users", r.responded_users},
       {"agent_roster", r.agent_roster},
       {"next_seq", r.next_seq},
       {"scene_refs", r.scene_refs},
       {"artifact_refs", r.artifact_refs},
       {"prompt_set_refs", r.prompt_set_refs},
       {"facilitation", std::move(facilitation)},
       {"counters",
        {{"snapshot", r.snapshot_counter}, {"artifact", r.artifact_counter}, {"prompt_set", r.prompt_set_counter}}},
       {"created_at_ms", r.created_at_ms},
       {"started_at_ms", optional_to_json(r.started_at_ms)},
       {"ended_at_ms", optional_to_json(r.ended_at_ms)}};
}

void from_json(const nlohmann::json& j, RoomDocument& r) {
  j.at("room_id").get_to(r.room_id);
  j.at("participants").get_to(r.participants);
  j.at("readiness").get_to(r.readiness);
  j.at("status").get_to(r.status);
  j.at("current_round").get_to(r.current_round);
  j.at("responded_users").get_to(r.responded_users);
  j.at("agent_roster").get_to(r.agent_roster);
  j.at("next_seq").get_to(r.next_seq);
  j.at("scene_refs").get_to(r.scene_refs);
  j.at("artifact_refs").get_to(r.artifact_refs);
  j.at("prompt_set_refs").get_to(r.prompt_set_refs);
  r.facilitation.clear();
  for (const auto& [round, f] : j.at("facilitation").items()) r.facilitation[std::stoi(round)] = f.get<Facilitation>();
  const auto& counters = j.at("counters");
  counters.at("snapshot").get_to(r.snapshot_counter);
  counters.at("artifact").get_to(r.artifact_counter);
  counters.at("prompt_set").get_to(r.prompt_set_counter);
  j.at("created_at_ms").get_to(r.created_at_ms);
  r.started_at_ms = optional_from_json<TimestampMs>(j, "started_at_ms");
  r.ended_at_ms = optional_from_json<TimestampMs>(j, "ended_at_ms");
}

// ---- scenes and artifacts ---------------------------------------------------

void to_json(nlohmann::json& j, const ViewParams& v) {
  j = {{"panorama_id", v.panorama_id}, {"heading", v.heading}, {"pitch", v.pitch},
       {"fov", v.fov},                 {"lat", v.latitude},     {"lon", v.longitude}};
}

void from_json(const nlohmann::json& j, ViewParams& v) {
  j.at("panorama_id").get_to(v.panorama_id);
  j.at("heading").get_to(v.heading);
  j.at("pitch").get_to(v.pitch);
  j.at("fov").get_to(v.fov);
  j.at("lat").get_to(v.latitude);
  j.at("lon").get_to(v.longitude);
}

void to_json(nlohmann::json& j, const SceneSnapshot& s) {
  j = {{"snapshot_id", s.snapshot_id}, {"room_id", s.room_id},         {"view", s.view},
       {"image_ref", s.image_ref},     {"saved_round", s.saved_round}, {"created_at_ms", s.created_at_ms}};
}

void from_json(const nlohmann::json& j, SceneSnapshot& s) {
  j.at("snapshot_id").get_to(s.snapshot_id);
  j.at("room_id").get_to(s.room_id);
  j.at("view").get_to(s.view);
  j.at("image_ref").get_to(s.image_ref);
  j.at("saved_round").get_to(s.saved_round);
  j.at("created_at_ms").get_to(s.created_at_ms);
}

void to_json(nlohmann::json& j, const ImageArtifact& a) {
  j = {{"artifact_id", a.artifact_id},
       {"room_id", a.room_id},
       {"kind", a.kind},
       {"source_snapshot", optional_to_json(a.source_snapshot)},
       {"parent_artifact", optional_to_json(a.parent_artifact)},
       {"prompt_set", optional_to_json(a.prompt_set)},
       {"bytes_ref", a.bytes_ref},
       {"content_hash", a.content_hash},
       {"created_round", a.created_round},
       {"generation_index", a.generation_index},
       {"event_seq", a.event_seq},
       {"created_at_ms", a.created_at_ms}};
}

void from_json(const nlohmann::json& j, ImageArtifact& a) {
  j.at("artifact_id").get_to(a.artifact_id);
  j.at("room_id").get_to(a.room_id);
  j.at("kind").get_to(a.kind);
  a.source_snapshot = optional_from_json<std::string>(j, "source_snapshot");
  a.parent_artifact = optional_from_json<std::string>(j, "parent_artifact");
  a.prompt_set = optional_from_json<std::string>(j, "prompt_set");
  j.at("bytes_ref").get_to(a.bytes_ref);
  j.at("content_hash").get_to(a.content_hash);
  j.at("created_round").get_to(a.created_round);
  j.at("generation_index").get_to(a.generation_index);
  j.at("event_seq").get_to(a.event_seq);
  j.at("created_at_ms").get_to(a.created_at_ms);
}

// ---- prompt sets ------------------------------------------------------------

void to_json(nlohmann::json& j, const PromptItem& p) {
  j = {{"text", p.text}, {"origin", p.origin}, {"valid", p.valid}, {"violations", p.violations}};
}

void from_json(const nlohmann::json& j, PromptItem& p) {
  j.at("text").get_to(p.text);
  j.at("origin").get_to(p.origin);
  j.at("valid").get_to(p.valid);
  j.at("violations").get_to(p.violations);
}

void to_json(nlohmann::json& j, const PromptSet& p) {
  j = {{"prompt_set_id", p.prompt_set_id},   {"room_id", p.room_id},       {"source_segment", p.source_segment},
       {"items", p.items},                   {"created_round", p.created_round}, {"degraded", p.degraded},
       {"created_at_ms", p.created_at_ms}};
}

void from_json(const nlohmann::json& j, PromptSet& p) {
  j.at("prompt_set_id").get_to(p.prompt_set_id);
  j.at("room_id").get_to(p.room_id);
  j.at("source_segment").get_to(p.source_segment);
  j.at("items").get_to(p.items);
  j.at("created_round").get_to(p.created_round);
  j.at("degraded").get_to(p.degraded);
  j.at("created_at_ms").get_to(p.created_at_ms);
}

}  // namespace codesign
