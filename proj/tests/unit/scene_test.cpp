#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "codesign/prompts/prompt_pipeline.hpp"
#include "codesign/scene/font.hpp"
#include "codesign/scene/png.hpp"
#include "codesign/scene/providers.hpp"
#include "codesign/scene/scene_studio.hpp"
#include "codesign/util/digest.hpp"
#include "fakes.hpp"

namespace codesign {
namespace {

using scene::Raster;
using scene::Rgb;

const ViewParams kView{"CAoSLEFGMVFpcE1abc", 112.5, 4.0, 90.0, 40.7411, -73.9897};

ErrorCode view_error(ViewParams v) {
  try {
    scene::validate_view_params(v);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ConfigError;
}

TEST(ViewParams, Ranges) {
  EXPECT_NO_THROW(scene::validate_view_params(kView));
  auto with = [](auto mutate) {
    ViewParams v = kView;
    mutate(v);
    return view_error(v);
  };
  EXPECT_EQ(with([](ViewParams& v) { v.panorama_id.clear(); }), ErrorCode::InvalidViewParams);
  EXPECT_EQ(with([](ViewParams& v) { v.heading = 360.0; }), ErrorCode::InvalidViewParams);
  EXPECT_EQ(with([](ViewParams& v) { v.heading = -0.5; }), ErrorCode::InvalidViewParams);
  EXPECT_EQ(with([](ViewParams& v) { v.pitch = 90.5; }), ErrorCode::InvalidViewParams);
  EXPECT_EQ(with([](ViewParams& v) { v.fov = 0.0; }), ErrorCode::InvalidViewParams);
  EXPECT_EQ(with([](ViewParams& v) { v.fov = 121.0; }), ErrorCode::InvalidViewParams);
  EXPECT_EQ(with([](ViewParams& v) { v.latitude = 91.0; }), ErrorCode::InvalidViewParams);
  EXPECT_EQ(with([](ViewParams& v) { v.longitude = -181.0; }), ErrorCode::InvalidViewParams);
  EXPECT_EQ(with([](ViewParams& v) { v.pitch = std::numeric_limits<double>::quiet_NaN(); }),
            ErrorCode::InvalidViewParams);
  ViewParams edge = kView;
  edge.heading = 0.0;
  edge.pitch = -90.0;
  edge.fov = 120.0;
  EXPECT_NO_THROW(scene::validate_view_params(edge));
}

TEST(Png, RoundTripAndHeader) {
  Raster r(7, 3, {10, 20, 30});
  r.set(6, 2, {255, 0, 128});
  const auto bytes = scene::encode_png(r);
  const std::uint8_t signature[] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  ASSERT_GT(bytes.size(), 24u);
  EXPECT_TRUE(std::equal(std::begin(signature), std::end(signature), bytes.begin()));
  // IHDR width and height, big endian, right after the chunk header.
  EXPECT_EQ(bytes[19], 7);
  EXPECT_EQ(bytes[23], 3);
  EXPECT_EQ(scene::decode_png(bytes), r);
  EXPECT_EQ(scene::encode_png(r), bytes);
  const std::vector<std::uint8_t> junk{1, 2, 3};
  EXPECT_THROW(scene::decode_png(junk), Error);
}

TEST(Font, MeasuresAndWraps) {
  EXPECT_EQ(scene::text_width(""), 0);
  EXPECT_EQ(scene::text_width("ab"), 2 * scene::kGlyphAdvance);
  const auto lines = scene::wrap_text("plant trees along the sidewalk", 12);
  EXPECT_EQ(lines, (std::vector<std::string>{"plant trees", "along the", "sidewalk"}));
}

TEST(MockScene, PureAndPoseSensitive) {
  scene::MockSceneProvider a, b;
  const auto first = a.fetch_scene_image(kView);
  EXPECT_EQ(first, b.fetch_scene_image(kView));
  const auto img = scene::decode_png(first);
  EXPECT_EQ(img.width(), 640);
  EXPECT_EQ(img.height(), 640);
  for (double delta : {-1.0, 1.0}) {
    ViewParams v = kView;
    v.heading += delta;
    EXPECT_NE(a.fetch_scene_image(v), first);
  }
  ViewParams other = kView;
  other.panorama_id = "CAoSLEFGMVFpcE1xyz";
  EXPECT_NE(a.fetch_scene_image(other), first);
}

TEST(MockRevision, PureAndPromptSensitive) {
  scene::MockSceneProvider scenes;
  scene::MockImageRevisionProvider revise;
  const auto source = scenes.fetch_scene_image(kView);
  const auto one = revise.revise(source, "instruction\n1. Add benches along the sidewalk edge");
  EXPECT_EQ(one, revise.revise(source, "instruction\n1. Add benches along the sidewalk edge"));
  EXPECT_NE(one, revise.revise(source, "instruction\n1. Plant trees along the sidewalk edge"));
  EXPECT_NE(one, source);
  EXPECT_EQ(scene::decode_png(one).width(), 640);
}

TEST(RevisionText, InstructionThenNumberedItems) {
  const std::vector<PromptItem> items = {{"Add benches", PromptOrigin::Extracted, true, {}},
                                         {"Plant trees", PromptOrigin::UserAdded, true, {}}};
  EXPECT_EQ(scene::revision_request_text(items),
            std::string(agents::revision_instruction()) + "\n1. Add benches\n2. Plant trees");
}

struct StudioRig {
  StudioRig() : pipeline(rig.sessions, rig.invoker), studio(rig.sessions, scenes, images) {
    rig.start("plaza", {"alice", "bob"});
  }

  std::string discuss_and_extract() {
    rig.sessions.post_message("plaza", "alice", "It is too hot here in summer, we need trees and shade.");
    rig.sessions.post_message("plaza", "bob", "Benches near the bus stop would help older people.");
    return pipeline.generate("plaza", "alice").prompt_set_id;
  }

  testing::SessionRig rig;
  scene::MockSceneProvider scenes;
  scene::MockImageRevisionProvider images;
  prompts::PromptPipeline pipeline;
  scene::SceneStudio studio;
};

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ConfigError;
}

TEST(Studio, SnapshotStoresSourceScene) {
  StudioRig s;
  const auto snap = s.studio.save_snapshot("plaza", "alice", kView);
  EXPECT_EQ(snap.snapshot_id, "plaza-snap-1");
  EXPECT_EQ(snap.view, kView);
  const auto art = s.studio.artifact(snap.image_ref);
  EXPECT_EQ(art.kind, ArtifactKind::SourceScene);
  EXPECT_EQ(art.generation_index, 0);
  EXPECT_EQ(art.source_snapshot, snap.snapshot_id);
  const auto bytes = s.studio.artifact_bytes(art.artifact_id);
  EXPECT_EQ(bytes, s.scenes.fetch_scene_image(kView));
  EXPECT_EQ(art.content_hash, "sha256:" + digest::sha256_hex(bytes));

  const auto last = s.rig.sessions.messages("plaza").back();
  EXPECT_EQ(last.content, "alice saved a street view snapshot.");
  EXPECT_EQ(last.seq, art.event_seq);
  ASSERT_TRUE(last.attachment);
  EXPECT_EQ(last.attachment->kind, "snapshot");
  EXPECT_EQ(s.studio.list_snapshots("plaza"), std::vector<SceneSnapshot>{snap});
}

TEST(Studio, SnapshotRejectsBadViewWithoutWriting) {
  StudioRig s;
  ViewParams bad = kView;
  bad.fov = 0;
  EXPECT_EQ(code_of([&] { s.studio.save_snapshot("plaza", "alice", bad); }), ErrorCode::InvalidViewParams);
  EXPECT_EQ(code_of([&] { s.studio.save_snapshot("plaza", "mallory", kView); }), ErrorCode::UnknownUser);
  EXPECT_TRUE(s.studio.list_snapshots("plaza").empty());
  EXPECT_TRUE(s.studio.list_artifacts("plaza").empty());
}

TEST(Studio, RevisionLineage) {
  StudioRig s;
  const auto snap = s.studio.save_snapshot("plaza", "alice", kView);
  const auto ps = s.discuss_and_extract();
  const auto first = s.studio.revise_image("plaza", "bob", ps);
  const auto second = s.studio.revise_image("plaza", "alice", ps);
  const auto sibling = s.studio.revise_image("plaza", "alice", ps, snap.snapshot_id);

  EXPECT_EQ(first.kind, ArtifactKind::RevisedDesign);
  EXPECT_EQ(first.generation_index, 1);
  EXPECT_EQ(first.parent_artifact, snap.image_ref);
  EXPECT_EQ(second.generation_index, 2);
  EXPECT_EQ(second.parent_artifact, first.artifact_id);
  EXPECT_EQ(sibling.generation_index, 1);
  EXPECT_EQ(sibling.parent_artifact, snap.image_ref);
  for (const auto& a : {first, second, sibling}) {
    EXPECT_EQ(a.source_snapshot, snap.snapshot_id);
    EXPECT_EQ(a.prompt_set, ps);
  }

  const auto set = s.pipeline.get(ps);
  const auto expected =
      s.images.revise(s.studio.artifact_bytes(snap.image_ref), scene::revision_request_text(set.items));
  EXPECT_EQ(s.studio.artifact_bytes(first.artifact_id), expected);
  EXPECT_EQ(s.studio.artifact_bytes(sibling.artifact_id), expected);

  const auto all = s.studio.list_artifacts("plaza");
  ASSERT_EQ(all.size(), 4u);
  EXPECT_EQ(all[2], second);
  EXPECT_EQ(s.rig.sessions.messages("plaza").back().content,
            "alice generated a revised design image (generation 1).");
}

TEST(Studio, RevisionErrors) {
  StudioRig s;
  const auto ps = s.discuss_and_extract();
  EXPECT_EQ(code_of([&] { s.studio.revise_image("plaza", "alice", ps); }), ErrorCode::NoSourceImage);
  s.studio.save_snapshot("plaza", "alice", kView);
  EXPECT_EQ(code_of([&] { s.studio.revise_image("plaza", "alice", "plaza-ps-7"); }), ErrorCode::UnknownPromptSet);
  EXPECT_EQ(code_of([&] { s.studio.revise_image("plaza", "alice", ps, "plaza-art-9"); }), ErrorCode::UnknownArtifact);
  EXPECT_EQ(code_of([&] { s.studio.revise_image("plaza", "mallory", ps); }), ErrorCode::UnknownUser);

  std::vector<prompts::PromptEdit> wipe;
  for (std::size_t i = 0; i < s.pipeline.get(ps).items.size(); ++i) {
    wipe.push_back({prompts::EditAction::Remove, 0, std::nullopt});
  }
  s.pipeline.edit_prompt_set(ps, wipe);
  EXPECT_EQ(code_of([&] { s.studio.revise_image("plaza", "alice", ps); }), ErrorCode::EmptyPromptSet);

  EXPECT_EQ(code_of([&] { s.studio.artifact("nope"); }), ErrorCode::UnknownArtifact);
}

TEST(Studio, PromptSetFromAnotherRoomIsUnknown) {
  StudioRig s;
  const auto ps = s.discuss_and_extract();
  s.rig.start("annex", {"alice"});
  s.studio.save_snapshot("annex", "alice", kView);
  EXPECT_EQ(code_of([&] { s.studio.revise_image("annex", "alice", ps); }), ErrorCode::UnknownPromptSet);
}

}  // namespace
}  // namespace codesign
