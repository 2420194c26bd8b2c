#include <algorithm>
#include <array>
#include <set>

#include "codesign/agents/chat_provider.hpp"
#include "codesign/error.hpp"
#include "codesign/util/digest.hpp"
#include "codesign/util/text.hpp"

namespace codesign::agents {
namespace {

enum class Persona { Facilitator, Designer, Planner, PromptParser, Generic };

Persona detect_persona(std::string_view system_prompt) {
  auto starts = [&](std::string_view prefix) { return system_prompt.substr(0, prefix.size()) == prefix; };
  if (starts("Given ONE chat segment")) return Persona::PromptParser;
  if (starts("You are an AI facilitator")) return Persona::Facilitator;
  if (starts("You are an AI urban designer")) return Persona::Designer;
  if (starts("You are an AI urban planner")) return Persona::Planner;
  return Persona::Generic;
}

struct BankEntry {
  std::string_view prompt;
  std::array<std::string_view, 4> keywords;
};

// Every entry satisfies the prompt grammar on its own.
constexpr std::array<BankEntry, 10> kPromptBank{{
    {"Plant street trees along the sidewalk to shade pedestrians", {"tree", "green", "shade", "plant"}},
    {"Add shaded seating clusters along active pedestrian corridors", {"bench", "seat", "sit", "rest"}},
    {"Install covered waste containers at regular intervals along the curb", {"trash", "waste", "litter", "bin"}},
    {"Widen the sidewalk near the corner to ease pedestrian flow", {"sidewalk", "walk", "crowd", "narrow"}},
    {"Provide protected bike parking next to the main building entrance", {"bike", "cycl", "bicycle", "scooter"}},
    {"Create a small pocket plaza with movable chairs and planters", {"plaza", "gather", "square", "planter"}},
    {"Calm traffic with raised crosswalks at the two nearest intersections", {"traffic", "car", "speed", "cross"}},
    {"Expand planted buffers between the travel lane and the footpath", {"buffer", "noise", "lane", "green"}},
    {"Install warm pedestrian-scale lighting along the storefront edge", {"light", "dark", "night", "lamp"}},
    {"Convert one parking lane into a continuous planted rain garden", {"parking", "rain", "storm", "flood"}},
}};

struct Theme {
  std::string_view keyword;
  std::string_view phrase;
};

constexpr std::array<Theme, 8> kThemes{{
    {"tree", "more shade and greenery along the street"},
    {"bench", "places to sit and pause"},
    {"trash", "a cleaner, better-kept sidewalk"},
    {"bike", "safer room for people on bikes"},
    {"traffic", "calmer traffic near the crossings"},
    {"light", "a brighter, safer street at night"},
    {"planter", "softer edges with planting"},
    {"parking", "reclaiming curb space for people"},
}};

std::string corpus_of(const CompletionRequest& request, bool users_only) {
  std::string corpus;
  for (const auto& turn : request.history) {
    if (users_only && (turn.label == "System" || turn.label.rfind("AI ", 0) == 0)) continue;
    corpus += text::ascii_lower(turn.content);
    corpus += '\n';
  }
  return corpus;
}

std::vector<std::string_view> ranked_prompts(const std::string& corpus, unsigned seed) {
  std::vector<std::pair<int, std::size_t>> scored;
  for (std::size_t i = 0; i < kPromptBank.size(); ++i) {
    int score = 0;
    for (auto kw : kPromptBank[i].keywords) {
      if (corpus.find(kw) != std::string::npos) ++score;
    }
    scored.emplace_back(score, (i + seed) % kPromptBank.size());
  }
  std::vector<std::size_t> order(kPromptBank.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scored[a].first != scored[b].first) return scored[a].first > scored[b].first;
    return scored[a].second < scored[b].second;
  });
  std::vector<std::string_view> out;
  for (auto i : order) out.push_back(kPromptBank[i].prompt);
  return out;
}

std::string theme_of(const std::string& corpus) {
  for (const auto& t : kThemes) {
    if (corpus.find(t.keyword) != std::string::npos) return std::string(t.phrase);
  }
  return "a more comfortable, welcoming street edge";
}

std::vector<std::string> speakers(const CompletionRequest& request) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& turn : request.history) {
    if (turn.label == "System" || turn.label.rfind("AI ", 0) == 0) continue;
    if (seen.insert(turn.label).second) out.push_back(turn.label);
  }
  return out;
}

}  // namespace

std::string MockChatProvider::complete(const CompletionRequest& request) {
  {
    std::lock_guard lock(mutex_);
    recorded_.push_back(request);
  }
  const std::string digest = digest::sha256_hex(canonical_request(request));
  const std::string tag = "[mock " + digest.substr(0, 12) + "]";
  const unsigned seed = static_cast<unsigned>(std::stoul(digest.substr(0, 8), nullptr, 16));

  switch (detect_persona(request.system_prompt)) {
    case Persona::PromptParser: {
      std::string corpus;
      if (!request.history.empty()) {
        auto segment = nlohmann::json::parse(request.history.back().content, nullptr, false);
        if (!segment.is_discarded() && segment.contains("messages")) {
          for (const auto& m : segment["messages"]) corpus += text::ascii_lower(m.value("content", "")) + "\n";
        } else {
          corpus = text::ascii_lower(request.history.back().content);
        }
      }
      auto ranked = ranked_prompts(corpus, seed);
      std::string out;
      for (std::size_t i = 0; i < 5; ++i) {
        out += ranked[i];
        out += '\n';
      }
      return out;
    }
    case Persona::Facilitator: {
      const std::string corpus = corpus_of(request, true);
      const auto names = speakers(request);
      std::string who = "the group";
      if (names.size() == 1) {
        who = names.front();
      } else if (names.size() > 1) {
        who = text::join({names.begin(), names.end() - 1}, ", ") + " and " + names.back();
      }
      return "Thanks, everyone. This round gathered ideas from " + who + ", who share a wish for " +
             theme_of(corpus) + ".\n\nMerged direction for the image: keep the existing street and layer in " +
             theme_of(corpus) + ".\n\nWhat if we also think about how the space feels at different times of day? " +
             tag;
    }
    case Persona::Designer: {
      const std::string corpus = corpus_of(request, true);
      return "Picture " + theme_of(corpus) +
             ", with warm materials and a consistent rhythm along the facades. "
             "How should the space feel on a busy afternoon? " + tag;
    }
    case Persona::Planner: {
      const std::string corpus = corpus_of(request, true);
      return "From a planning view, " + theme_of(corpus) +
             " also shapes safety and access for pedestrians, children, and older adults on this block. "
             "A practical next step is to test the idea on one frontage before extending it along the corridor. " +
             tag;
    }
    case Persona::Generic:
      break;
  }
  return "Noted. " + tag;
}

std::vector<CompletionRequest> MockChatProvider::recorded() const {
  std::lock_guard lock(mutex_);
  return recorded_;
}

std::size_t MockChatProvider::call_count() const {
  std::lock_guard lock(mutex_);
  return recorded_.size();
}

void MockChatProvider::clear() {
  std::lock_guard lock(mutex_);
  recorded_.clear();
}

}  // namespace codesign::agents
