#include "codesign/api/config.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <system_error>

#include "codesign/error.hpp"

namespace codesign::api {
namespace {

// A resolved setting remembers where it came from so errors can name it.
struct Setting {
  std::optional<std::string> value;
  std::string source;
};

class Resolver {
 public:
  Resolver(const std::map<std::string, std::string>& flags, const EnvLookup& env) : flags_(flags), env_(env) {}

  Setting get(const std::string& flag, const std::string& var) const {
    if (auto it = flags_.find(flag); it != flags_.end()) return {it->second, "--" + flag};
    if (auto v = env_(var)) return {*v, var};
    return {std::nullopt, var};
  }

 private:
  const std::map<std::string, std::string>& flags_;
  const EnvLookup& env_;
};

long long parse_int(const Setting& s, long long lo, long long hi) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(*s.value, &used);
    if (used != s.value->size()) throw std::invalid_argument("trailing characters");
    if (v < lo || v > hi) {
      throw ConfigError(s.source, "must be between " + std::to_string(lo) + " and " + std::to_string(hi));
    }
    return v;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError(s.source, "'" + *s.value + "' is not an integer");
  }
}

ProviderMode parse_mode(const Setting& s) {
  if (!s.value || *s.value == "mock") return ProviderMode::Mock;
  if (*s.value == "live") return ProviderMode::Live;
  throw ConfigError(s.source, "expected 'mock' or 'live', got '" + *s.value + "'");
}

ProviderConfig resolve_provider(const Resolver& r, const EnvLookup& env, const std::string& name,
                                const std::string& prefix) {
  ProviderConfig p;
  p.mode = parse_mode(r.get(name + "-provider", prefix + "_PROVIDER"));
  const Setting endpoint = r.get(name + "-endpoint", prefix + "_ENDPOINT");
  if (endpoint.value) p.endpoint = *endpoint.value;
  if (p.mode == ProviderMode::Live) {
    if (p.endpoint.empty()) throw ConfigError(endpoint.source, "required for a live " + name + " provider");
    const std::string key_var = prefix + "_API_KEY";
    auto key = env(key_var);
    if (!key || key->empty()) throw ConfigError(key_var, "required for a live " + name + " provider");
    p.api_key = *key;
  }
  return p;
}

void probe_writable(const std::filesystem::path& dir, const std::string& source) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw ConfigError(source, "cannot create store directory '" + dir.string() + "'");
  }
  const auto probe = dir / ".write-probe";
  {
    std::ofstream out(probe, std::ios::trunc);
    out << "ok";
    out.flush();
    if (!out) throw ConfigError(source, "store directory '" + dir.string() + "' is not writable");
  }
  std::filesystem::remove(probe, ec);
}

}  // namespace

EnvLookup process_environment() {
  return [](const std::string& name) -> std::optional<std::string> {
    if (const char* v = std::getenv(name.c_str())) return std::string(v);
    return std::nullopt;
  };
}

ServiceConfig load_config(const std::vector<std::string>& args, const EnvLookup& env) {
  static const std::vector<std::string> kFlags = {
      "host",           "port",          "store",          "store-dir",        "chat-provider",
      "chat-endpoint",  "scene-provider", "scene-endpoint", "image-provider",  "image-endpoint",
      "prompt-dir",     "cors-origin",   "threads",        "max-participants", "history-max-messages",
      "history-max-chars", "retry-attempts"};

  CLI::App app{"codesign service"};
  std::map<std::string, std::string> given;
  std::map<std::string, std::string> raw;
  for (const auto& flag : kFlags) app.add_option("--" + flag, raw[flag]);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw ConfigError("arguments", e.what());
  }
  for (const auto& flag : kFlags) {
    if (app.count("--" + flag) > 0) given[flag] = raw[flag];
  }

  const Resolver r(given, env);
  ServiceConfig config;
  if (auto s = r.get("host", "CODESIGN_HOST"); s.value) {
    if (s.value->empty()) throw ConfigError(s.source, "must not be empty");
    config.host = *s.value;
  }
  if (auto s = r.get("port", "CODESIGN_PORT"); s.value) config.port = static_cast<int>(parse_int(s, 0, 65535));

  const Setting store = r.get("store", "CODESIGN_STORE");
  const Setting store_dir = r.get("store-dir", "CODESIGN_STORE_DIR");
  if (!store.value || *store.value == "memory") {
    if (store_dir.value) throw ConfigError(store_dir.source, "only valid with the file store");
  } else if (*store.value == "file") {
    config.store = StoreBackend::File;
    if (!store_dir.value || store_dir.value->empty()) throw ConfigError(store_dir.source, "required for the file store");
    config.store_dir = *store_dir.value;
    probe_writable(config.store_dir, store_dir.source);
  } else {
    throw ConfigError(store.source, "expected 'memory' or 'file', got '" + *store.value + "'");
  }

  config.chat = resolve_provider(r, env, "chat", "CODESIGN_CHAT");
  config.scene = resolve_provider(r, env, "scene", "CODESIGN_SCENE");
  config.image = resolve_provider(r, env, "image", "CODESIGN_IMAGE");

  if (auto s = r.get("prompt-dir", "CODESIGN_PROMPT_DIR"); s.value) {
    if (!std::filesystem::is_directory(*s.value)) throw ConfigError(s.source, "'" + *s.value + "' is not a directory");
    config.prompt_dir = *s.value;
  }
  if (auto s = r.get("cors-origin", "CODESIGN_CORS_ORIGIN"); s.value) config.cors_origin = *s.value;
  if (auto s = r.get("threads", "CODESIGN_THREADS"); s.value) config.threads = static_cast<int>(parse_int(s, 1, 256));
  if (auto s = r.get("max-participants", "CODESIGN_MAX_PARTICIPANTS"); s.value) {
    config.session_limits.max_participants = static_cast<std::size_t>(parse_int(s, 1, 1024));
  }
  if (auto s = r.get("history-max-messages", "CODESIGN_HISTORY_MAX_MESSAGES"); s.value) {
    config.history_limits.max_messages = static_cast<std::size_t>(parse_int(s, 1, 100000));
  }
  if (auto s = r.get("history-max-chars", "CODESIGN_HISTORY_MAX_CHARS"); s.value) {
    config.history_limits.max_chars = static_cast<std::size_t>(parse_int(s, 1, 10000000));
  }
  if (auto s = r.get("retry-attempts", "CODESIGN_RETRY_ATTEMPTS"); s.value) {
    config.retry.max_attempts = static_cast<int>(parse_int(s, 1, 1000));
  }
  return config;
}

}  // namespace codesign::api
