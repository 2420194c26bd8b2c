#include <gtest/gtest.h>

#include <fstream>
#include <map>

#include "codesign/api/config.hpp"
#include "fakes.hpp"

namespace codesign {
namespace {

using api::load_config;

api::EnvLookup env_of(std::map<std::string, std::string> vars) {
  return [vars = std::move(vars)](const std::string& name) -> std::optional<std::string> {
    auto it = vars.find(name);
    if (it == vars.end()) return std::nullopt;
    return it->second;
  };
}

std::string failing_key(const std::vector<std::string>& args, std::map<std::string, std::string> vars = {}) {
  try {
    load_config(args, env_of(std::move(vars)));
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "";
}

TEST(Config, Defaults) {
  const auto c = load_config({}, env_of({}));
  EXPECT_EQ(c.host, "127.0.0.1");
  EXPECT_EQ(c.port, 8080);
  EXPECT_EQ(c.store, api::StoreBackend::Memory);
  EXPECT_EQ(c.chat.mode, api::ProviderMode::Mock);
  EXPECT_EQ(c.scene.mode, api::ProviderMode::Mock);
  EXPECT_EQ(c.image.mode, api::ProviderMode::Mock);
  EXPECT_EQ(c.cors_origin, "*");
  EXPECT_EQ(c.threads, 8);
  EXPECT_FALSE(c.prompt_dir);
}

TEST(Config, FlagsBeatEnvironmentBeatsDefaults) {
  const auto env = env_of({{"CODESIGN_PORT", "9000"}, {"CODESIGN_HOST", "0.0.0.0"}, {"CODESIGN_THREADS", "3"}});
  const auto from_env = load_config({}, env);
  EXPECT_EQ(from_env.port, 9000);
  EXPECT_EQ(from_env.host, "0.0.0.0");
  EXPECT_EQ(from_env.threads, 3);
  const auto from_flags = load_config({"--port", "9100", "--threads=5"}, env);
  EXPECT_EQ(from_flags.port, 9100);
  EXPECT_EQ(from_flags.threads, 5);
  EXPECT_EQ(from_flags.host, "0.0.0.0");
}

TEST(Config, Limits) {
  const auto c = load_config({"--max-participants", "4", "--history-max-messages", "50", "--history-max-chars",
                              "1000", "--retry-attempts", "7"},
                             env_of({}));
  EXPECT_EQ(c.session_limits.max_participants, 4u);
  EXPECT_EQ(c.history_limits.max_messages, 50u);
  EXPECT_EQ(c.history_limits.max_chars, 1000u);
  EXPECT_EQ(c.retry.max_attempts, 7);
}

TEST(Config, BadValuesNameTheirSource) {
  EXPECT_EQ(failing_key({"--port", "70000"}), "--port");
  EXPECT_EQ(failing_key({"--port", "80x"}), "--port");
  EXPECT_EQ(failing_key({}, {{"CODESIGN_PORT", "-1"}}), "CODESIGN_PORT");
  EXPECT_EQ(failing_key({"--threads", "0"}), "--threads");
  EXPECT_EQ(failing_key({"--store", "redis"}), "--store");
  EXPECT_EQ(failing_key({"--chat-provider", "maybe"}), "--chat-provider");
  EXPECT_EQ(failing_key({"--bogus", "1"}), "arguments");
  EXPECT_EQ(failing_key({"--prompt-dir", "/definitely/not/here"}), "--prompt-dir");
}

TEST(Config, LiveProviderNeedsEndpointAndKey) {
  EXPECT_EQ(failing_key({"--chat-provider", "live"}), "CODESIGN_CHAT_ENDPOINT");
  EXPECT_EQ(failing_key({"--chat-provider", "live", "--chat-endpoint", "https://llm.example/v1"}),
            "CODESIGN_CHAT_API_KEY");
  EXPECT_EQ(failing_key({"--image-provider", "live", "--image-endpoint", "https://img.example"}),
            "CODESIGN_IMAGE_API_KEY");
  const auto c = load_config({"--chat-provider", "live", "--chat-endpoint", "https://llm.example/v1"},
                             env_of({{"CODESIGN_CHAT_API_KEY", "secret"}}));
  EXPECT_EQ(c.chat.mode, api::ProviderMode::Live);
  EXPECT_EQ(c.chat.endpoint, "https://llm.example/v1");
  EXPECT_EQ(c.chat.api_key, "secret");
}

TEST(Config, MissingKeyMessageNamesVariable) {
  try {
    load_config({"--scene-provider", "live", "--scene-endpoint", "https://maps.example"}, env_of({}));
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("CODESIGN_SCENE_API_KEY"), std::string::npos);
  }
}

TEST(Config, FileStoreDirectory) {
  testing::TempDir dir;
  const auto store_dir = dir.path() / "data";
  const auto c = load_config({"--store", "file", "--store-dir", store_dir.string()}, env_of({}));
  EXPECT_EQ(c.store, api::StoreBackend::File);
  EXPECT_TRUE(std::filesystem::is_directory(store_dir));
  EXPECT_FALSE(std::filesystem::exists(store_dir / ".write-probe"));

  EXPECT_EQ(failing_key({"--store", "file"}), "CODESIGN_STORE_DIR");
  EXPECT_EQ(failing_key({"--store-dir", store_dir.string()}), "--store-dir");

  // A path below a regular file can never be created, even as root.
  const auto blocker = dir.path() / "blocker";
  std::ofstream(blocker) << "x";
  EXPECT_EQ(failing_key({"--store", "file", "--store-dir", (blocker / "data").string()}), "--store-dir");
  EXPECT_EQ(failing_key({}, {{"CODESIGN_STORE", "file"}, {"CODESIGN_STORE_DIR", (blocker / "data").string()}}),
            "CODESIGN_STORE_DIR");
}

}  // namespace
}  // namespace codesign
