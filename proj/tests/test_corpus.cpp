// Copyright 2026 The Framekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "framekit/corpus.hpp"
#include "framekit/error.hpp"
#include "framekit/stats.hpp"
#include "support/builders.hpp"

using framekit::Corpus;
using framekit::Error;
using framekit::ErrorKind;
using testsupport::make_annotation;
using testsupport::make_sentence;
using testsupport::mini_corpus;

namespace {

std::string golden_path() {
  return std::string(FRAMEKIT_FIXTURE_DIR) + "/golden_corpus.jsonl";
}

std::string serialize(const Corpus& corpus) {
  std::ostringstream out;
  framekit::write_corpus(corpus, out);
  return out.str();
}

}  // namespace

TEST_CASE("golden fixture loads with all invariants") {
  Corpus corpus = framekit::load_corpus(golden_path());
  CHECK(corpus.sentences.size() == 3);
  CHECK(corpus.annotations.size() == 4);
  CHECK(corpus.scenes.size() == 1);
  CHECK(corpus.frames.size() == 2);
  CHECK(corpus.loader_flags.empty());
  CHECK(corpus.find_sentence("d1") != nullptr);
  CHECK(corpus.find_frame("A") != nullptr);
  CHECK(corpus.find_lus("alpha.v", "de").size() == 1);
  CHECK(corpus.find_lus("alpha.v", "fr").empty());
}

TEST_CASE("golden fixture matches the in-memory builder byte for byte") {
  CHECK(serialize(mini_corpus()) == testsupport::read_file(golden_path()));
}

TEST_CASE("save then load is the identity on the data model") {
  Corpus first = framekit::load_corpus(golden_path());
  std::string canonical = serialize(first);
  std::istringstream in(canonical);
  Corpus second = framekit::read_corpus(in);
  CHECK(serialize(second) == canonical);
}

TEST_CASE("role span past the end of the sentence names the sentence") {
  std::string path = testsupport::temp_path("bad_span.jsonl");
  std::string content = testsupport::read_file(golden_path());
  // Push one role span beyond the 4-token sentence e1.
  std::string needle = "{\"role_name\":\"Agent\",\"span\":{\"start\":0,\"end\":1}";
  auto pos = content.find("e1\",\"target\"");
  REQUIRE(pos != std::string::npos);
  auto fill_pos = content.find(needle, pos);
  REQUIRE(fill_pos != std::string::npos);
  content.replace(fill_pos, needle.size(),
                  "{\"role_name\":\"Agent\",\"span\":{\"start\":0,\"end\":9}");
  testsupport::write_file(path, content);
  try {
    framekit::load_corpus(path);
    FAIL("expected span error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::span);
    CHECK(std::string(e.what()).find("e1") != std::string::npos);
  }
}

TEST_CASE("malformed line reports its line number") {
  std::string path = testsupport::temp_path("malformed.jsonl");
  testsupport::write_file(path,
                          "{\"type\":\"scene\",\"name\":\"s\",\"frame_names\":[\"F\"]}\n"
                          "this is not json\n");
  try {
    framekit::load_corpus(path);
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::parse);
    CHECK(std::string(e.what()).find(":2") != std::string::npos);
  }
}

TEST_CASE("dangling references name the missing entity") {
  Corpus corpus = mini_corpus();
  corpus.annotations.push_back(make_annotation("ghost", 0, 1, "A"));
  try {
    corpus.finalize();
    FAIL("expected reference error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::reference);
    CHECK(std::string(e.what()).find("ghost") != std::string::npos);
  }

  Corpus lu_corpus = mini_corpus();
  lu_corpus.lexical_units.push_back({"delta.v", "de", "NoSuchFrame"});
  try {
    lu_corpus.finalize();
    FAIL("expected reference error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::reference);
    CHECK(std::string(e.what()).find("NoSuchFrame") != std::string::npos);
  }
}

TEST_CASE("ontology-violating annotations are retained and flagged") {
  std::string path = testsupport::temp_path("flagged.jsonl");
  std::string content = testsupport::read_file(golden_path());
  content +=
      "{\"type\":\"annotation\",\"sentence_id\":\"e1\","
      "\"target\":{\"start\":0,\"end\":1},\"frame_name\":\"Zzz\","
      "\"role_fills\":[],\"frame_confidence\":1.0}\n";
  testsupport::write_file(path, content);
  Corpus corpus = framekit::load_corpus(path);
  CHECK(corpus.annotations.size() == 5);  // kept, not dropped
  REQUIRE(corpus.loader_flags.size() == 1);
  CHECK(corpus.loader_flags[0].kind == framekit::ViolationKind::unknown_frame);
}

TEST_CASE("duplicate sentence ids are rejected") {
  Corpus corpus = mini_corpus();
  corpus.sentences.push_back(make_sentence("d1", "de", {"x"}));
  CHECK_THROWS_AS(corpus.finalize(), Error);
}

TEST_CASE("lu ids must be lemma.pos") {
  Corpus corpus = mini_corpus();
  corpus.lexical_units.push_back({"noext", "de", "A"});
  CHECK_THROWS_AS(corpus.finalize(), Error);

  Corpus corpus2 = mini_corpus();
  corpus2.lexical_units.push_back({"kick.xyz", "de", "A"});
  CHECK_THROWS_AS(corpus2.finalize(), Error);

  Corpus corpus3 = mini_corpus();
  corpus3.lexical_units.push_back({"hold_the_line.idiom", "de", "A"});
  corpus3.finalize();  // idiom is a valid pos
}

TEST_CASE("an exemplar corpus may not contain unannotated sentences") {
  Corpus corpus = mini_corpus();
  corpus.sentences.push_back(make_sentence("bare", "de", {"nur", "text"}));
  CHECK_THROWS_AS(corpus.finalize(), Error);

  corpus.kind = framekit::CorpusKind::fulltext;
  corpus.finalize();  // fulltext has no such requirement
}

TEST_CASE("stats over the mini fixture match the hand count") {
  framekit::StatsReport report = framekit::corpus_stats(mini_corpus(), 5);
  CHECK(report.total_annotations == 4);
  CHECK(report.unique_sentences == 3);
  CHECK(report.annotations_per_sentence == doctest::Approx(4.0 / 3.0));
  CHECK(report.by_language.at("de") == 2);
  CHECK(report.by_language.at("en") == 1);
  CHECK(report.by_language.at("fr") == 1);
  REQUIRE(report.top_by_frame.size() == 2);
  CHECK(report.top_by_frame[0].frame_name == "A");
  CHECK(report.top_by_frame[0].count == 3);
  CHECK(report.top_by_frame[1].frame_name == "B");
  CHECK(report.frame_count_with_exemplars == 2);
  CHECK(framekit::count_frames_with_exemplars(mini_corpus()) == 2);

  // top LU is alpha.v with two de annotations
  REQUIRE(!report.top_by_lu.empty());
  CHECK(report.top_by_lu[0].lu_id == "alpha.v");
  CHECK(report.top_by_lu[0].count == 2);
}

TEST_CASE("empty corpus yields zero counts") {
  Corpus corpus;
  corpus.finalize();
  framekit::StatsReport report = framekit::corpus_stats(corpus, 5);
  CHECK(report.total_annotations == 0);
  CHECK(report.unique_sentences == 0);
  CHECK(report.annotations_per_sentence == 0.0);
  CHECK(report.by_language.empty());
  CHECK(report.top_by_frame.empty());
  CHECK(framekit::count_frames_with_exemplars(corpus) == 0);
}

TEST_CASE("by_language always sums to the total") {
  framekit::StatsReport report = framekit::corpus_stats(mini_corpus(), 5);
  std::int64_t sum = 0;
  for (const auto& [language, count] : report.by_language) sum += count;
  CHECK(sum == report.total_annotations);
}

TEST_CASE("stats are insensitive to annotation order") {
  Corpus corpus = mini_corpus();
  std::string baseline = framekit::stats_to_json(
      framekit::corpus_stats(corpus, 5, /*merge_lu_languages=*/true));
  std::mt19937_64 rng(13);
  for (int round = 0; round < 5; ++round) {
    for (std::size_t i = corpus.annotations.size() - 1; i > 0; --i) {
      std::swap(corpus.annotations[i], corpus.annotations[rng() % (i + 1)]);
    }
    corpus.finalize();
    CHECK(framekit::stats_to_json(framekit::corpus_stats(
              corpus, 5, /*merge_lu_languages=*/true)) == baseline);
  }
}

TEST_CASE("lu language merging covers the cross-language reading") {
  Corpus corpus = mini_corpus();
  // One LU id shared by en and fr, one annotation each.
  corpus.lexical_units.push_back({"corner.n", "en", "A"});
  corpus.lexical_units.push_back({"corner.n", "fr", "B"});
  corpus.annotations.push_back(
      make_annotation("e1", 2, 3, "A", {}, "corner.n"));
  corpus.annotations.push_back(
      make_annotation("f1", 2, 3, "B", {}, "corner.n"));
  corpus.finalize();

  framekit::StatsReport split = framekit::corpus_stats(corpus, 10, false);
  std::int64_t separate_entries = 0;
  for (const framekit::LuCount& lu : split.top_by_lu) {
    if (lu.lu_id == "corner.n") {
      ++separate_entries;
      CHECK(lu.count == 1);
    }
  }
  CHECK(separate_entries == 2);

  framekit::StatsReport merged = framekit::corpus_stats(corpus, 10, true);
  bool found = false;
  for (const framekit::LuCount& lu : merged.top_by_lu) {
    if (lu.lu_id == "corner.n") {
      found = true;
      CHECK(lu.count == 2);
      CHECK(lu.languages == std::vector<std::string>{"en", "fr"});
    }
  }
  CHECK(found);
}

TEST_CASE("in an exemplar corpus unique_sentences never exceeds annotations") {
  framekit::StatsReport report = framekit::corpus_stats(mini_corpus(), 5);
  CHECK(report.unique_sentences <= report.total_annotations);
}

TEST_CASE("top_k must be positive") {
  CHECK_THROWS_AS(framekit::corpus_stats(mini_corpus(), 0), Error);
}
