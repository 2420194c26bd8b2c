#include <gtest/gtest.h>

#include "codesign/prompts/prompt_pipeline.hpp"
#include "codesign/prompts/segment.hpp"
#include "codesign/prompts/validator.hpp"
#include "fakes.hpp"
#include "prompt_corpus.hpp"
#include "reference_validator.hpp"

namespace codesign {
namespace {

using prompts::ValidationContext;
using prompts::validate_prompt;

TEST(Validator, ExamplePromptIsValid) {
  const auto r = validate_prompt("Add shaded seating clusters along active pedestrian corridors");
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.word_count, 8u);
  EXPECT_EQ(r.first_word, "Add");
  EXPECT_TRUE(r.violations.empty());
}

TEST(Validator, CorpusMatchesExpectationsAndReference) {
  const auto corpus = testing::prompt_corpus();
  ASSERT_GE(corpus.size(), 200u);
  for (const auto& c : corpus) {
    const auto actual = validate_prompt(c.text, c.context);
    const auto reference = testing::reference_validate(c.text, c.context);
    EXPECT_EQ(actual.violations, c.expected) << c.label << ": " << c.text;
    EXPECT_EQ(actual.violations, reference.violations) << c.label << ": " << c.text;
    EXPECT_EQ(actual.valid, reference.valid) << c.label;
    EXPECT_EQ(actual.word_count, reference.word_count) << c.label;
    if (c.expected_words) {
      EXPECT_EQ(actual.word_count, *c.expected_words) << c.label;
    }
  }
}

TEST(Validator, BlankTextThrows) {
  EXPECT_THROW(validate_prompt("   "), Error);
  EXPECT_THROW(validate_prompt(""), Error);
}

TEST(Validator, VerbListIsClosed) {
  EXPECT_EQ(prompts::strong_verbs().size(), 17u);
  ValidationContext extended;
  extended.extra_verbs = {"Restore"};
  EXPECT_FALSE(validate_prompt("Restore the historic paving along the old market street").valid);
  EXPECT_TRUE(validate_prompt("Restore the historic paving along the old market street", extended).valid);
}

TEST(Validator, DedupKeyIgnoresCaseAndSpacing) {
  EXPECT_EQ(prompts::dedup_key("Add  shaded\tseating"), prompts::dedup_key("add shaded SEATING "));
  EXPECT_NE(prompts::dedup_key("Add shaded seating"), prompts::dedup_key("Add shaded seats"));
}

ChatMessage user_msg(std::int64_t seq, std::string author, std::string content, int round = 1) {
  ChatMessage m;
  m.room_id = "plaza";
  m.seq = seq;
  m.author = std::move(author);
  m.content = std::move(content);
  m.round_index = round;
  return m;
}

TEST(Segment, DropsSystemMessagesAndRoundTrips) {
  auto system = user_msg(1, "System", "alice saved a street view snapshot.");
  system.role = MessageRole::System;
  auto facilitator = user_msg(4, "AI Facilitator", "Summary", 1);
  facilitator.role = MessageRole::Facilitator;
  const std::vector<ChatMessage> log = {system, user_msg(2, "alice", "Shade \"please\""), user_msg(3, "bob", "Trees"),
                                        facilitator};
  const auto segment = prompts::serialize_segment(log, "alice");
  EXPECT_EQ(segment.user_id, "alice");
  EXPECT_EQ(segment.segment_id, "plaza#2-4");
  ASSERT_EQ(segment.messages.size(), 3u);
  EXPECT_EQ(segment.messages[2].role, MessageRole::Facilitator);

  const auto encoded = prompts::encode_segment(segment);
  EXPECT_EQ(encoded.rfind(R"({"messages":[{"author":"alice","content":"Shade \"please\"","role":"User","round_index":1},)", 0),
            0u);
  EXPECT_NE(encoded.find(R"("segment_id":"plaza#2-4","user_id":"alice"})"), std::string::npos);
  EXPECT_EQ(prompts::decode_segment(encoded), segment);
  EXPECT_EQ(prompts::encode_segment(prompts::decode_segment(encoded)), encoded);
}

TEST(Segment, OnlySystemMessagesIsEmptyHistory) {
  auto system = user_msg(1, "System", "note");
  system.role = MessageRole::System;
  const std::vector<ChatMessage> log = {system};
  try {
    prompts::serialize_segment(log, "alice");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyHistory);
  }
}

struct ExtractionFixture {
  explicit ExtractionFixture(std::vector<std::string> replies)
      : provider(std::move(replies)), personas(agents::PersonaCatalog::builtin()), invoker(personas, provider) {
    segment.user_id = "alice";
    segment.segment_id = "plaza#1-1";
    segment.messages.push_back({"alice", MessageRole::User, "We need shade", 1});
    context.usernames = {"alice", "bob"};
  }

  testing::ScriptedChatProvider provider;
  agents::PersonaCatalog personas;
  agents::AgentInvoker invoker;
  prompts::SegmentDocument segment;
  ValidationContext context;
};

const std::string kSix =
    "Add shaded seating clusters along active pedestrian corridors\n"
    "Plant street trees along the sunny south facing sidewalk\n"
    "Install raised crosswalks at the busy school intersection\n"
    "Widen the sidewalk near the bus stop for waiting riders\n"
    "Provide covered bicycle parking beside the corner cafe entrance\n"
    "Create a small pocket plaza with movable tables and chairs";

TEST(Extraction, KeepsValidLinesAndCapsAtSix) {
  ExtractionFixture f({kSix + "\nExpand planting beds around the existing mature street trees"});
  const auto set = prompts::extract_prompts(f.segment, f.invoker, f.context);
  EXPECT_EQ(set.items.size(), 6u);
  EXPECT_FALSE(set.degraded);
  EXPECT_EQ(set.source_segment, "plaza#1-1");
  EXPECT_EQ(f.provider.requests().size(), 1u);
  for (const auto& item : set.items) {
    EXPECT_TRUE(item.valid);
    EXPECT_EQ(item.origin, PromptOrigin::Extracted);
  }
}

TEST(Extraction, StripsMarkersAndDuplicates) {
  ExtractionFixture f({"1. Add shaded seating clusters along active pedestrian corridors\n"
                       "- add shaded  seating clusters along active pedestrian corridors\n"
                       "* Plant street trees along the sunny south facing sidewalk\n"
                       "Here are your prompts:\n"
                       "Install raised crosswalks at the busy school intersection\n"
                       "Widen the sidewalk near the bus stop for waiting riders"});
  const auto set = prompts::extract_prompts(f.segment, f.invoker, f.context);
  ASSERT_EQ(set.items.size(), 4u);
  EXPECT_EQ(set.items[0].text, "Add shaded seating clusters along active pedestrian corridors");
  EXPECT_EQ(set.items[1].text, "Plant street trees along the sunny south facing sidewalk");
}

TEST(Extraction, UnderProductionRetriesOnceThenDegrades) {
  ExtractionFixture f({"Add shaded seating clusters along active pedestrian corridors\nalice wants benches",
                       "Plant street trees along the sunny south facing sidewalk"});
  const auto set = prompts::extract_prompts(f.segment, f.invoker, f.context);
  EXPECT_EQ(f.provider.requests().size(), 2u);
  EXPECT_EQ(set.items.size(), 2u);
  EXPECT_TRUE(set.degraded);
}

TEST(Extraction, RetryCanRecover) {
  ExtractionFixture f({"Add shaded seating clusters along active pedestrian corridors", kSix});
  const auto set = prompts::extract_prompts(f.segment, f.invoker, f.context);
  EXPECT_EQ(set.items.size(), 6u);
  EXPECT_FALSE(set.degraded);
}

TEST(Extraction, RequestCarriesEncodedSegment) {
  ExtractionFixture f({kSix});
  prompts::extract_prompts(f.segment, f.invoker, f.context);
  const auto req = f.provider.requests().at(0);
  EXPECT_EQ(req.params, (agents::GenerationParams{1024, 0.35, 0.9}));
  ASSERT_EQ(req.history.size(), 1u);
  EXPECT_EQ(req.history[0].label, "alice");
  EXPECT_EQ(req.history[0].content, prompts::encode_segment(f.segment));
}

PromptSet base_set() {
  PromptSet set;
  set.prompt_set_id = "plaza-ps-1";
  set.items = {{"Add shaded seating clusters along active pedestrian corridors", PromptOrigin::Extracted, true, {}},
               {"Plant street trees along the sunny south facing sidewalk", PromptOrigin::Extracted, true, {}}};
  return set;
}

TEST(Edits, EditRemoveAppend) {
  ValidationContext ctx;
  ctx.usernames = {"alice"};
  const std::vector<prompts::PromptEdit> edits = {
      {prompts::EditAction::Edit, 0, "Install raised crosswalks at the busy school intersection"},
      {prompts::EditAction::Append, std::nullopt, "alice wants more benches"},
      {prompts::EditAction::Remove, 1, std::nullopt}};
  const auto out = prompts::apply_edits(base_set(), edits, ctx);
  ASSERT_EQ(out.items.size(), 2u);
  EXPECT_EQ(out.items[0].origin, PromptOrigin::UserEdited);
  EXPECT_TRUE(out.items[0].valid);
  EXPECT_EQ(out.items[1].origin, PromptOrigin::UserAdded);
  EXPECT_FALSE(out.items[1].valid);
  EXPECT_EQ(out.items[1].violations,
            (std::vector<Violation>{Violation::NoStrongVerb, Violation::TooShort, Violation::MetadataLeak}));
  EXPECT_EQ(out, prompts::apply_edits(base_set(), edits, ctx));
}

TEST(Edits, DuplicatesCollapse) {
  const std::vector<prompts::PromptEdit> edits = {
      {prompts::EditAction::Append, std::nullopt, "  ADD shaded seating clusters along active pedestrian corridors "}};
  const auto out = prompts::apply_edits(base_set(), edits, {});
  EXPECT_EQ(out.items.size(), 2u);
}

TEST(Edits, Errors) {
  auto code = [](std::vector<prompts::PromptEdit> edits) {
    try {
      prompts::apply_edits(base_set(), edits, {});
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ConfigError;
  };
  EXPECT_EQ(code({{prompts::EditAction::Remove, 2, std::nullopt}}), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code({{prompts::EditAction::Remove, std::nullopt, std::nullopt}}), ErrorCode::InvalidArgument);
  EXPECT_EQ(code({{prompts::EditAction::Edit, 0, " "}}), ErrorCode::EmptyText);
  EXPECT_EQ(code({{prompts::EditAction::Append, std::nullopt, std::nullopt}}), ErrorCode::InvalidArgument);
}

TEST(Pipeline, GenerateStoresSetAndAnnounces) {
  testing::SessionRig rig;
  prompts::PromptPipeline pipeline(rig.sessions, rig.invoker);
  rig.start("plaza", {"alice", "bob"});
  rig.sessions.post_message("plaza", "alice", "It is too hot here in summer, we need trees and shade.");
  rig.sessions.post_message("plaza", "bob", "Benches near the bus stop would help older people.");

  const auto set = pipeline.generate("plaza", "alice");
  EXPECT_EQ(set.prompt_set_id, "plaza-ps-1");
  EXPECT_GE(set.items.size(), prompts::kMinPrompts);
  EXPECT_LE(set.items.size(), prompts::kMaxPrompts);
  EXPECT_FALSE(set.degraded);
  const auto ctx = pipeline.context_for("plaza");
  for (const auto& item : set.items) EXPECT_TRUE(validate_prompt(item.text, ctx).valid) << item.text;
  EXPECT_EQ(pipeline.get(set.prompt_set_id), set);
  EXPECT_EQ(pipeline.list("plaza"), std::vector<PromptSet>{set});

  const auto last = rig.sessions.messages("plaza").back();
  EXPECT_EQ(last.role, MessageRole::System);
  ASSERT_TRUE(last.attachment);
  EXPECT_EQ(last.attachment->id, set.prompt_set_id);

  const std::vector<prompts::PromptEdit> edits = {{prompts::EditAction::Remove, 0, std::nullopt}};
  const auto edited = pipeline.edit_prompt_set(set.prompt_set_id, edits);
  EXPECT_EQ(edited.items.size(), set.items.size() - 1);
  EXPECT_EQ(pipeline.get(set.prompt_set_id), edited);
  EXPECT_THROW(pipeline.get("plaza-ps-9"), Error);
}

TEST(Pipeline, RequiresDiscussionAndMembership) {
  testing::SessionRig rig;
  prompts::PromptPipeline pipeline(rig.sessions, rig.invoker);
  rig.start("plaza", {"alice"});
  EXPECT_THROW(pipeline.generate("plaza", "alice"), Error);
  rig.sessions.post_message("plaza", "alice", "shade");
  EXPECT_THROW(pipeline.generate("plaza", "mallory"), Error);
}

}  // namespace
}  // namespace codesign
