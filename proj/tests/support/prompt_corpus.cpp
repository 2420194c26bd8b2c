#include "prompt_corpus.hpp"

namespace codesign::testing {
namespace {

using V = Violation;

const std::vector<std::string> kVerbs = {"Add",      "Increase", "Reduce", "Convert", "Provide", "Prioritize",
                                         "Create",   "Plant",    "Install", "Widen",  "Separate", "Buffer",
                                         "Shade",    "Calm",     "Slow",    "Expand", "Protect"};

// Eight-word tails that read as design interventions after any verb.
const std::vector<std::string> kTails = {
    "low planting beds along the narrow sidewalk edge",
    "the quiet corner with benches and small trees",
    "space for cyclists beside the bus stop area",
    "wide planted buffers between traffic and the walkway",
    "a continuous tree canopy over the school crossing",
};

std::string words(std::size_t n) {
  static const std::vector<std::string> pool = {"green", "street", "edge", "bench", "tree", "lane", "plaza",
                                                "curb",  "shade",  "path", "wall",  "park", "stop", "walk"};
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += ' ';
    out += pool[i % pool.size()];
  }
  return out;
}

}  // namespace

prompts::ValidationContext corpus_room() {
  prompts::ValidationContext c;
  c.usernames = {"alice", "Maria Lopez", "jun", "Bob"};
  c.panorama_ids = {"CAoSLEFGMVFpcE1abc"};
  c.source_messages = {
      "I think we should add more trees along this street because it gets really hot in summer",
      "maybe some benches near the bus stop so older people can rest while they wait",
      "the crossing feels dangerous, cars come around the corner way too fast here",
  };
  return c;
}

std::vector<CorpusCase> prompt_corpus() {
  std::vector<CorpusCase> cases;
  const auto room = corpus_room();
  auto add = [&](std::string label, std::string text, std::vector<V> expected,
                 std::optional<std::size_t> wc = std::nullopt, std::optional<prompts::ValidationContext> ctx = {}) {
    cases.push_back({std::move(label), std::move(text), ctx ? *ctx : room, std::move(expected), wc});
  };

  // Reference examples.
  add("example prompt", "Add shaded seating clusters along active pedestrian corridors", {}, 8);
  add("single noun", "Trees", {V::NoStrongVerb, V::TooShort, V::TranscriptCopy}, 1);
  add("twelve words", "Plant street trees along the corridor to buffer pedestrians from passing traffic", {}, 12);
  add("username mention", "Add more trees near alice house by the old panorama spot", {V::MetadataLeak}, 11);
  add("lowercase verb", "add sustainable wooden benches and planters along the sidewalk", {}, 9);

  // Every verb with every tail.
  for (const auto& verb : kVerbs) {
    for (const auto& tail : kTails) add("verb " + verb, verb + " " + tail, {}, 9);
  }
  for (const auto& verb : {"ADD", "pLaNt", "shade", "CALM"}) {
    add("verb case", std::string(verb) + " " + kTails[0], {}, 9);
  }

  // Non-whitelisted openers.
  for (const auto& weak : {"Make", "Improve", "Consider", "Build", "Maybe", "We", "Green", "Adding", "Planting",
                           "Additional", "Trees", "Please", "Let's", "Design", "Introduce"}) {
    add("weak opener " + std::string(weak), std::string(weak) + " " + kTails[1], {V::NoStrongVerb}, 9);
  }

  // Length sweep around the bounds.
  for (std::size_t n = 0; n <= 16; ++n) {
    std::vector<V> expected;
    const std::size_t wc = n + 1;
    if (wc < 6) expected.push_back(V::TooShort);
    if (wc > 14) expected.push_back(V::TooLong);
    if (wc == 1) expected.push_back(V::TranscriptCopy);  // "add" alone is a full run of a source message
    add("length " + std::to_string(wc), "Add " + words(n), expected, wc);
  }
  add("too short and weak", "Nice idea", {V::NoStrongVerb, V::TooShort}, 2);
  add("too long and weak", "We could " + words(14), {V::NoStrongVerb, V::TooLong}, 16);

  // Tokenization details.
  add("hyphenated compound", "Add tree-lined medians with drought-tolerant ground-cover planting", {}, 7);
  add("punctuated verb", "Add, at the corner, a small seating nook", {}, 8);
  add("quoted verb", "\"Plant\" native shrubs between the sidewalk and parking lane", {}, 9);
  add("trailing period", "Widen the sidewalk at the busy school entrance.", {}, 8);
  add("tabs between words", "Install\tbike\tracks\tnext\tto\tthe\tlibrary\tsteps", {}, 8);
  add("newline inside", "Install bike racks\nnext to the library steps", {}, 8);
  add("leading whitespace", "   Calm traffic with a raised crossing at the corner   ", {}, 9);
  add("no-break spaces", "Shade\xC2\xA0the\xC2\xA0" "bus\xC2\xA0stop\xC2\xA0with\xC2\xA0" "a\xC2\xA0" "canopy", {}, 7);
  add("ideographic space", "Shade the bus stop\xE3\x80\x80with a light canopy", {}, 8);
  add("thin spaces", "Slow\xE2\x80\x89turning\xE2\x80\x89" "cars with tighter corner radii here", {}, 8);
  add("em dash word", "Add planters \xE2\x80\x94 low ones \xE2\x80\x94 along the curb", {}, 9);
  add("accented words", "Create a caf\xC3\xA9 terrace with movable chairs and parasols", {}, 9);
  add("non-ascii opener", "\xC3\x81" "dd planters along the sidewalk near the school", {V::NoStrongVerb}, 8);
  add("verb glued to word", "Add-on planters along the sidewalk near the school", {V::NoStrongVerb}, 8);
  add("lone punctuation", "Add -- planters along the sidewalk near school", {}, 8);
  add("punctuation opener", "... Add planters along the sidewalk near school", {V::NoStrongVerb}, 8);

  // Usernames.
  add("username capitalized", "Plant trees where Alice suggested along the street", {V::MetadataLeak});
  add("username possessive", "Plant trees outside alice's favorite corner cafe today", {V::MetadataLeak});
  add("username curly possessive", "Plant trees outside alice\xE2\x80\x99s favorite corner cafe today",
      {V::MetadataLeak});
  add("username with punctuation", "Plant trees as jun, the resident, proposed earlier", {V::MetadataLeak});
  add("two-word username", "Add benches that Maria Lopez wanted near the stop", {V::MetadataLeak});
  add("two-word username possessive", "Add benches from maria lopez's sketch near the stop", {V::MetadataLeak});
  add("first name only of two-word user", "Add benches that Maria wanted near the bus stop", {});
  add("username inside word", "Add jungle gym equipment to the small pocket park", {});
  add("username substring of word", "Add bobbing fountains to the small pocket plaza", {});
  add("username alone", "Protect bob", {V::TooShort, V::MetadataLeak});
  add("name without room context", "Plant trees where Alice suggested along the street", {}, std::nullopt,
      prompts::ValidationContext{});

  // Round labels.
  add("round label", "Add benches agreed in round 2 near the bus stop", {V::MetadataLeak});
  add("round label capitalized", "Add benches agreed in Round 12 near the bus stop", {V::MetadataLeak});
  add("round label glued", "Add benches agreed in round3 near the bus stop", {V::MetadataLeak});
  add("round label dashed", "Add benches agreed in round-4 near the bus stop", {V::MetadataLeak});
  add("round as adjective", "Add round planters and benches near the bus stop", {});
  add("round with word", "Add a round table for chess players near the stop", {});
  add("roundabout", "Calm traffic at the roundabout with raised crossings for walkers", {});

  // Coordinates, times, dates, panorama ids.
  add("latitude", "Add trees at 40.7411 along the western sidewalk edge", {V::MetadataLeak});
  add("longitude negative", "Add trees near -73.98970 along the western sidewalk", {V::MetadataLeak});
  add("coordinate pair", "Add a plaza at (40.741100, -73.989700) on the corner", {V::MetadataLeak});
  add("short decimal", "Widen the sidewalk by 1.5 meters near the school", {});
  add("two decimals", "Widen the sidewalk by 2.25 meters near the school", {});
  add("clock time", "Calm traffic before 8:30 near the elementary school gate", {V::MetadataLeak});
  add("clock time pm", "Calm traffic after 17:45 near the elementary school gate", {V::MetadataLeak});
  add("ratio not time", "Add planters at a 1:2 ratio along the school frontage", {});
  add("iso date", "Install lighting before 2024-05-01 along the dark underpass walk", {V::MetadataLeak});
  add("year only", "Install lighting like the 2024 plan along the underpass walk", {});
  add("known panorama id", "Add trees to view CAoSLEFGMVFpcE1abc along the street", {V::MetadataLeak});
  add("panorama id glued", "Add trees to pano:CAoSLEFGMVFpcE1abc along the street", {V::MetadataLeak});
  add("unknown pano-like token", "Add trees near F3kDk9s8dJ2lQw0P_xYz along the main street", {V::MetadataLeak});
  add("long plain word", "Install weatherproofing-components along the bus shelter roof", {});
  add("long digits only", "Install 1234567890123456 lights along the bus shelter roof", {});
  add("fifteen-char mixed token", "Install AB12CD34EF56GH7 lights along the bus shelter roof", {});
  add("sixteen-char mixed token", "Install AB12CD34EF56GH78 lights along the bus shelter roof", {V::MetadataLeak});

  // Transcript copies.
  add("verbatim copy", "Add more trees along this street because it gets really hot in summer",
      {V::TranscriptCopy});
  add("copy of benches line", "Provide some benches near the bus stop so older people can rest",
      {V::TranscriptCopy});
  add("paraphrase", "Plant shade trees along the hot street to cool summer walks", {});
  add("partial overlap below threshold", "Add more trees along this block and widen the corner curbs", {});
  add("copy of crossing line", "Calm the crossing, cars come around the corner way too fast",
      {V::TranscriptCopy});
  add("copy with case and punctuation", "ADD MORE TREES, along this street; because it gets really hot!",
      {V::TranscriptCopy});
  add("copy without sources", "Add more trees along this street because it gets really hot in summer", {},
      std::nullopt, prompts::ValidationContext{});

  // Several violations at once.
  add("weak, long and leaking", "We should do what alice said in round 2 about trees and benches and lights",
      {V::NoStrongVerb, V::TooLong, V::MetadataLeak});
  add("short and leaking", "Add trees, jun", {V::TooShort, V::MetadataLeak});
  add("copy and leak", "maybe some benches near the bus stop so older people can rest, bob",
      {V::NoStrongVerb, V::MetadataLeak, V::TranscriptCopy});
  add("everything", "alice said we should add more trees along this street because it gets really hot in summer ok",
      {V::NoStrongVerb, V::TooLong, V::MetadataLeak, V::TranscriptCopy});

  // Extension verbs.
  auto extended = room;
  extended.extra_verbs = {"Restore"};
  add("extension verb", "Restore the historic paving along the old market street", {}, 9, extended);
  add("extension verb absent", "Restore the historic paving along the old market street", {V::NoStrongVerb}, 9);

  // Metadata injected into each valid template.
  const std::vector<std::pair<std::string, std::string>> leaks = {
      {"alice", "user"},  {"Bob's", "possessive"}, {"round 7", "round"}, {"51.5074", "coordinate"},
      {"9:15", "time"},   {"2023-11-30", "date"},   {"CAoSLEFGMVFpcE1abc", "pano"}};
  for (const auto& tail : kTails) {
    for (const auto& [token, kind] : leaks) {
      add("injected " + kind, "Add " + token + " " + tail, {V::MetadataLeak});
    }
  }
  return cases;
}

}  // namespace codesign::testing
