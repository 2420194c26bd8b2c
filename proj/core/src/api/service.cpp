#include "codesign/api/service.hpp"

#include "codesign/error.hpp"
#include "codesign/store/file_store.hpp"
#include "codesign/store/memory_store.hpp"

namespace codesign::api {

ServiceParts mock_parts() {
  ServiceParts parts;
  parts.store = std::make_unique<store::MemoryStore>();
  parts.chat = std::make_unique<agents::MockChatProvider>();
  parts.scene = std::make_unique<scene::MockSceneProvider>();
  parts.image = std::make_unique<scene::MockImageRevisionProvider>();
  parts.clock = std::make_unique<SteppingClock>();
  parts.personas = std::make_unique<agents::PersonaCatalog>(agents::PersonaCatalog::builtin());
  return parts;
}

ServiceParts parts_from_config(const ServiceConfig& config) {
  ServiceParts parts;
  if (config.store == StoreBackend::File) {
    parts.store = std::make_unique<store::FileStore>(config.store_dir);
  } else {
    parts.store = std::make_unique<store::MemoryStore>();
  }

  if (config.chat.mode == ProviderMode::Live) {
    parts.chat = std::make_unique<agents::HttpChatProvider>(config.chat.endpoint, config.chat.api_key);
  } else {
    parts.chat = std::make_unique<agents::MockChatProvider>();
  }
  if (config.scene.mode == ProviderMode::Live) {
    parts.scene = std::make_unique<scene::HttpSceneProvider>(config.scene.endpoint, config.scene.api_key);
  } else {
    parts.scene = std::make_unique<scene::MockSceneProvider>();
  }
  if (config.image.mode == ProviderMode::Live) {
    parts.image = std::make_unique<scene::HttpImageRevisionProvider>(config.image.endpoint, config.image.api_key);
  } else {
    parts.image = std::make_unique<scene::MockImageRevisionProvider>();
  }

  parts.clock = std::make_unique<SystemClock>();
  parts.personas = std::make_unique<agents::PersonaCatalog>(
      config.prompt_dir ? agents::PersonaCatalog::load_directory(*config.prompt_dir) : agents::PersonaCatalog::builtin());
  parts.session_limits = config.session_limits;
  parts.history_limits = config.history_limits;
  parts.retry = config.retry;
  return parts;
}

Service::Service(ServiceParts parts)
    : parts_(std::move(parts)),
      invoker_(*parts_.personas, *parts_.chat, parts_.history_limits),
      sessions_(*parts_.store, invoker_, *parts_.clock, parts_.session_limits, parts_.retry),
      experts_(sessions_, invoker_),
      prompts_(sessions_, invoker_),
      studio_(sessions_, *parts_.scene, *parts_.image) {}

}  // namespace codesign::api
