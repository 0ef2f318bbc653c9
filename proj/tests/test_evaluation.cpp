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

#include <map>

#include "framekit/error.hpp"
#include "framekit/evaluate.hpp"
#include "support/builders.hpp"
#include "support/seqlabel_oracle.hpp"
#include "support/synthetic.hpp"

using framekit::Annotation;
using framekit::Corpus;
using framekit::LabelSequence;
using framekit::PredictionSet;
using framekit::ScoreMode;
using framekit::ScoreReport;
using testsupport::make_annotation;
using testsupport::make_sentence;

namespace {

// Gold: one Shot at [2,3) with Shooter [0,1), on a single 6-token sentence.
Corpus shot_corpus() {
  Corpus corpus;
  corpus.scenes.push_back({"s", {"Shot", "Pass"}});
  corpus.frames.push_back({"Shot", "s", {"Shooter", "Ball"}});
  corpus.frames.push_back({"Pass", "s", {"Sender"}});
  corpus.sentences.push_back(
      make_sentence("x1", "en", {"w0", "w1", "w2", "w3", "w4", "w5"}));
  corpus.annotations.push_back(make_annotation(
      "x1", 2, 3, "Shot", {{"Shooter", {0, 1}, 1.0}}));
  corpus.finalize();
  return corpus;
}

PredictionSet with(std::vector<Annotation> annotations) {
  PredictionSet set;
  set.provenance = "test";
  set.annotations = std::move(annotations);
  return set;
}

}  // namespace

TEST_CASE("threshold 0 is the identity filter") {
  Annotation a = make_annotation("x1", 2, 3, "Shot", {{"Shooter", {0, 1}, 0.4}});
  a.frame_confidence = 0.2;
  PredictionSet filtered = framekit::filter_by_confidence(with({a}), 0.0);
  REQUIRE(filtered.annotations.size() == 1);
  CHECK(filtered.annotations[0].role_fills.size() == 1);
}

TEST_CASE("threshold 1.0 keeps only confidence-1.0 items") {
  Annotation full = make_annotation("x1", 2, 3, "Shot");
  full.frame_confidence = 1.0;
  Annotation partial = make_annotation("x1", 4, 5, "Pass");
  partial.frame_confidence = 0.9;
  PredictionSet filtered =
      framekit::filter_by_confidence(with({full, partial}), 1.0);
  REQUIRE(filtered.annotations.size() == 1);
  CHECK(filtered.annotations[0].frame_name == "Shot");

  // Role fills are filtered against their own confidences.
  Annotation mixed = make_annotation(
      "x1", 2, 3, "Shot", {{"Shooter", {0, 1}, 1.0}, {"Ball", {4, 5}, 0.9}});
  PredictionSet roles = framekit::filter_by_confidence(with({mixed}), 1.0);
  REQUIRE(roles.annotations.size() == 1);
  REQUIRE(roles.annotations[0].role_fills.size() == 1);
  CHECK(roles.annotations[0].role_fills[0].role_name == "Shooter");
}

TEST_CASE("raising the threshold never adds items") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    testsupport::RandomPair pair = testsupport::random_pair(seed);
    for (const auto& [id, set] : pair.preds) {
      std::size_t previous_annotations = set.annotations.size() + 1;
      for (double threshold : {0.0, 0.3, 0.6, 1.0}) {
        PredictionSet filtered =
            framekit::filter_by_confidence(set, threshold);
        CHECK(filtered.annotations.size() <= previous_annotations);
        previous_annotations = filtered.annotations.size();
      }
    }
  }
}

TEST_CASE("threshold outside [0,1] is a usage error") {
  CHECK_THROWS_AS(framekit::filter_by_confidence(with({}), -0.1),
                  framekit::Error);
  CHECK_THROWS_AS(framekit::filter_by_confidence(with({}), 1.1),
                  framekit::Error);
}

TEST_CASE("label sequences paint targets and roles") {
  Corpus corpus = shot_corpus();
  const framekit::Sentence& sentence = corpus.sentences[0];

  LabelSequence empty = framekit::to_label_sequence(sentence, {});
  for (const std::string& label : empty.frame_layer) CHECK(label == "O");
  for (const std::string& label : empty.role_layer) CHECK(label == "O");

  Annotation a = make_annotation("x1", 2, 4, "Shot", {{"Shooter", {0, 1}, 1.0}});
  LabelSequence seq = framekit::to_label_sequence(sentence, {a});
  CHECK(seq.frame_layer[2] == "B-Shot");
  CHECK(seq.frame_layer[3] == "I-Shot");
  CHECK(seq.frame_layer[0] == "O");
  CHECK(seq.role_layer[0] == "B-Shot:Shooter");
  CHECK(seq.collisions == 0);
}

TEST_CASE("colliding spans resolve to the smaller (frame, start) key") {
  Corpus corpus = shot_corpus();
  const framekit::Sentence& sentence = corpus.sentences[0];
  Annotation pass = make_annotation("x1", 2, 5, "Pass");
  Annotation shot = make_annotation("x1", 3, 6, "Shot");
  LabelSequence seq = framekit::to_label_sequence(sentence, {shot, pass});
  // "Pass" < "Shot", so Pass owns [2,5) and Shot keeps only token 5.
  CHECK(seq.frame_layer[2] == "B-Pass");
  CHECK(seq.frame_layer[3] == "I-Pass");
  CHECK(seq.frame_layer[4] == "I-Pass");
  CHECK(seq.frame_layer[5] == "B-Shot");
  CHECK(seq.collisions == 2);  // Shot was denied tokens 3 and 4
}

TEST_CASE("interrupted spans restart with B- and stay BIO well-formed") {
  Corpus corpus = shot_corpus();
  const framekit::Sentence& sentence = corpus.sentences[0];
  // Pass [1,3) wins over Shot [0,5); Shot's tokens split into two runs.
  Annotation shot = make_annotation("x1", 0, 5, "Shot");
  Annotation pass = make_annotation("x1", 1, 3, "Pass");
  LabelSequence seq = framekit::to_label_sequence(sentence, {shot, pass});
  CHECK(seq.frame_layer[0] == "B-Shot");
  CHECK(seq.frame_layer[1] == "B-Pass");
  CHECK(seq.frame_layer[2] == "I-Pass");
  CHECK(seq.frame_layer[3] == "B-Shot");  // restart, not I-Shot
  CHECK(seq.frame_layer[4] == "I-Shot");

  for (std::size_t t = 0; t < seq.frame_layer.size(); ++t) {
    const std::string& label = seq.frame_layer[t];
    if (label.rfind("I-", 0) != 0) continue;
    std::string content = label.substr(2);
    REQUIRE(t > 0);
    bool ok = seq.frame_layer[t - 1] == "B-" + content ||
              seq.frame_layer[t - 1] == "I-" + content;
    CHECK(ok);
  }
}

TEST_CASE("span out of bounds raises an error") {
  Corpus corpus = shot_corpus();
  Annotation bad = make_annotation("x1", 4, 9, "Shot");
  CHECK_THROWS_AS(
      framekit::to_label_sequence(corpus.sentences[0], {bad}),
      framekit::Error);
}

TEST_CASE("gold-predicate restriction keeps overlapping targets only") {
  Corpus corpus = shot_corpus();
  const std::vector<Annotation>& gold = corpus.annotations;

  Annotation matching = make_annotation("x1", 2, 3, "Shot");
  Annotation hallucinated = make_annotation("x1", 4, 5, "Pass");

  PredictionSet identical =
      framekit::restrict_to_gold_predicates(with({matching}), gold);
  CHECK(identical.annotations.size() == 1);

  PredictionSet mixed = framekit::restrict_to_gold_predicates(
      with({matching, hallucinated}), gold);
  REQUIRE(mixed.annotations.size() == 1);
  CHECK(mixed.annotations[0].frame_name == "Shot");

  PredictionSet empty = framekit::restrict_to_gold_predicates(with({}), gold);
  CHECK(empty.annotations.empty());

  // Partial token overlap is enough.
  Annotation partial = make_annotation("x1", 2, 5, "Pass");
  CHECK(framekit::restrict_to_gold_predicates(with({partial}), gold)
            .annotations.size() == 1);
}

TEST_CASE("gold scored against itself is perfect in every configuration") {
  Corpus corpus = shot_corpus();
  std::map<std::string, PredictionSet> preds;
  preds["x1"] = with(corpus.annotations);
  for (ScoreMode mode : {ScoreMode::raw, ScoreMode::gold_pred}) {
    for (double threshold : {0.0, 1.0}) {
      ScoreReport report = framekit::score(corpus, preds, mode, threshold);
      CHECK(report.frames.precision == 1.0);
      CHECK(report.frames.recall == 1.0);
      CHECK(report.frames.f1 == 1.0);
      CHECK(report.roles.precision == 1.0);
      CHECK(report.roles.recall == 1.0);
      CHECK(report.roles.f1 == 1.0);
    }
  }
}

TEST_CASE("hallucinated predicate costs raw precision but not gold_pred") {
  Corpus corpus = shot_corpus();
  Annotation matching = corpus.annotations[0];
  Annotation hallucinated = make_annotation("x1", 4, 5, "Pass");
  std::map<std::string, PredictionSet> preds;
  preds["x1"] = with({matching, hallucinated});

  ScoreReport raw = framekit::score(corpus, preds, ScoreMode::raw, 0.0);
  CHECK(raw.frames.tp == 1);
  CHECK(raw.frames.fp == 1);
  CHECK(raw.frames.fn == 0);
  CHECK(raw.frames.precision == 0.5);
  CHECK(raw.frames.recall == 1.0);

  ScoreReport gp = framekit::score(corpus, preds, ScoreMode::gold_pred, 0.0);
  CHECK(gp.frames.precision == 1.0);
  CHECK(gp.frames.recall == 1.0);
}

TEST_CASE("empty predictions score zero against non-empty gold") {
  Corpus corpus = shot_corpus();
  for (ScoreMode mode : {ScoreMode::raw, ScoreMode::gold_pred}) {
    ScoreReport report = framekit::score(corpus, {}, mode, 0.0);
    CHECK(report.frames.recall == 0.0);
    CHECK(report.frames.precision == 0.0);
    CHECK(report.frames.f1 == 0.0);
    CHECK(report.roles.recall == 0.0);
  }
}

TEST_CASE("unknown sentence ids are rejected") {
  Corpus corpus = shot_corpus();
  std::map<std::string, PredictionSet> preds;
  preds["nope"] = with({make_annotation("nope", 0, 1, "Shot")});
  CHECK_THROWS_AS(framekit::score(corpus, preds, ScoreMode::raw, 0.0),
                  framekit::Error);
}

TEST_CASE("score reports serialize to JSON with 4-decimal metrics") {
  Corpus corpus = shot_corpus();
  std::map<std::string, PredictionSet> preds;
  preds["x1"] = with({make_annotation("x1", 2, 3, "Shot"),
                      make_annotation("x1", 4, 6, "Pass")});
  ScoreReport report = framekit::score(corpus, preds, ScoreMode::raw, 0.0);
  std::string json = framekit::score_report_to_json(report);
  CHECK(json.find("\"mode\": \"raw\"") != std::string::npos);
  CHECK(json.find("\"precision\": 0.3333") != std::string::npos);
  CHECK(json.find("\"tp\": 1") != std::string::npos);
  CHECK(json.find("gold_collisions") != std::string::npos);
}

TEST_CASE("collisions show up in the report diagnostics") {
  Corpus corpus;
  corpus.scenes.push_back({"s", {"Shot", "Pass"}});
  corpus.frames.push_back({"Shot", "s", {"Shooter"}});
  corpus.frames.push_back({"Pass", "s", {"Sender"}});
  corpus.sentences.push_back(
      make_sentence("x1", "en", {"w0", "w1", "w2", "w3"}));
  // Two gold targets claiming token 1.
  corpus.annotations.push_back(make_annotation("x1", 0, 2, "Shot"));
  corpus.annotations.push_back(make_annotation("x1", 1, 3, "Pass"));
  corpus.finalize();

  ScoreReport report = framekit::score(corpus, {}, ScoreMode::raw, 0.0);
  CHECK(report.gold_collisions == 1);
  CHECK(report.pred_collisions == 0);

  std::map<std::string, PredictionSet> preds;
  preds["x1"] = with(corpus.annotations);
  ScoreReport both = framekit::score(corpus, preds, ScoreMode::raw, 0.0);
  CHECK(both.gold_collisions == 1);
  CHECK(both.pred_collisions == 1);
}

TEST_CASE("painted layers are always BIO well-formed") {
  auto well_formed = [](const std::vector<std::string>& layer) {
    for (std::size_t t = 0; t < layer.size(); ++t) {
      if (layer[t].rfind("I-", 0) != 0) continue;
      if (t == 0) return false;
      std::string content = layer[t].substr(2);
      if (layer[t - 1] != "B-" + content && layer[t - 1] != "I-" + content) {
        return false;
      }
    }
    return true;
  };
  for (std::uint64_t seed = 300; seed < 340; ++seed) {
    testsupport::RandomPair pair = testsupport::random_pair(seed);
    for (const framekit::Sentence& sentence : pair.gold.sentences) {
      std::vector<Annotation> gold;
      for (const Annotation& a : pair.gold.annotations) {
        if (a.sentence_id == sentence.id) gold.push_back(a);
      }
      LabelSequence gold_seq = framekit::to_label_sequence(sentence, gold);
      CHECK(well_formed(gold_seq.frame_layer));
      CHECK(well_formed(gold_seq.role_layer));
      auto it = pair.preds.find(sentence.id);
      if (it != pair.preds.end()) {
        LabelSequence pred_seq =
            framekit::to_label_sequence(sentence, it->second.annotations);
        CHECK(well_formed(pred_seq.frame_layer));
        CHECK(well_formed(pred_seq.role_layer));
      }
    }
  }
}

TEST_CASE("scorer agrees with the brute-force oracle on random pairs") {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    testsupport::RandomPair pair = testsupport::random_pair(seed);
    for (bool gold_pred : {false, true}) {
      for (double threshold : {0.0, 0.6, 1.0}) {
        ScoreReport report = framekit::score(
            pair.gold, pair.preds,
            gold_pred ? ScoreMode::gold_pred : ScoreMode::raw, threshold);
        oracle::OracleReport expected =
            oracle::score_oracle(pair.gold, pair.preds, gold_pred, threshold);
        CHECK(report.frames.tp == expected.frames.tp);
        CHECK(report.frames.fp == expected.frames.fp);
        CHECK(report.frames.fn == expected.frames.fn);
        CHECK(report.frames.precision == expected.frames.precision);
        CHECK(report.frames.recall == expected.frames.recall);
        CHECK(report.frames.f1 == expected.frames.f1);
        CHECK(report.roles.tp == expected.roles.tp);
        CHECK(report.roles.fp == expected.roles.fp);
        CHECK(report.roles.fn == expected.roles.fn);
        CHECK(report.roles.precision == expected.roles.precision);
        CHECK(report.roles.recall == expected.roles.recall);
        CHECK(report.roles.f1 == expected.roles.f1);
      }
    }
  }
}
