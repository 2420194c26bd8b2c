#pragma once

#include <memory>

#include "codesign/agents/agent_config.hpp"
#include "codesign/agents/agent_invoker.hpp"
#include "codesign/agents/chat_provider.hpp"
#include "codesign/agents/expert_desk.hpp"
#include "codesign/api/config.hpp"
#include "codesign/clock.hpp"
#include "codesign/prompts/prompt_pipeline.hpp"
#include "codesign/scene/providers.hpp"
#include "codesign/scene/scene_studio.hpp"
#include "codesign/session/session_service.hpp"
#include "codesign/store/document_store.hpp"

namespace codesign::api {

/// Owned collaborators of a running service. Tests inject their own.
struct ServiceParts {
  std::unique_ptr<store::DocumentStore> store;
  std::unique_ptr<agents::ChatProvider> chat;
  std::unique_ptr<scene::SceneProvider> scene;
  std::unique_ptr<scene::ImageRevisionProvider> image;
  std::unique_ptr<Clock> clock;
  std::unique_ptr<agents::PersonaCatalog> personas;
  session::SessionLimits session_limits;
  agents::HistoryLimits history_limits;
  store::RetryPolicy retry;
};

/// Mock providers, an in-memory store and a stepping clock.
ServiceParts mock_parts();

/// Builds the parts a configuration describes (opens the file store,
/// loads prompt overrides, wires live adapters).
ServiceParts parts_from_config(const ServiceConfig& config);

/// The module graph behind the gateway. Holds no request state.
class Service {
 public:
  explicit Service(ServiceParts parts);

  store::DocumentStore& store() { return *parts_.store; }
  session::SessionService& sessions() { return sessions_; }
  agents::ExpertDesk& experts() { return experts_; }
  prompts::PromptPipeline& prompts() { return prompts_; }
  scene::SceneStudio& studio() { return studio_; }
  Clock& clock() { return *parts_.clock; }
  agents::ChatProvider& chat_provider() { return *parts_.chat; }

 private:
  ServiceParts parts_;
  agents::AgentInvoker invoker_;
  session::SessionService sessions_;
  agents::ExpertDesk experts_;
  prompts::PromptPipeline prompts_;
  scene::SceneStudio studio_;
};

}  // namespace codesign::api
