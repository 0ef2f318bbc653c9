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
//
// Sequence-label scoring of predictions against gold. Each sentence becomes
// two per-token label layers: the frame layer (B-f / I-f on target spans)
// and the role layer (B-f:r / I-f:r on role spans, frame-qualified). A token
// whose non-O predicted label equals the gold label is a true positive;
// counts are micro-aggregated over all sentences.
//
// Two modes address the exemplar-gap problem: RAW scores everything the
// model said (precision is depressed by unannotated predicates), GOLD_PRED
// first drops predicted annotations whose target shares no token with any
// gold target, which makes precision interpretable while leaving frame
// recall untouched.

#ifndef FRAMEKIT_EVALUATE_HPP_
#define FRAMEKIT_EVALUATE_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "framekit/corpus.hpp"
#include "framekit/predictions.hpp"

namespace framekit {

enum class ScoreMode { raw, gold_pred };

std::string to_string(ScoreMode mode);

// Per-token BIO labels for one sentence, one string per token and layer.
struct LabelSequence {
  std::vector<std::string> frame_layer;
  std::vector<std::string> role_layer;
  // Tokens claimed by more than one span on one layer; the claim with the
  // lexicographically smaller sort key wins, the rest are counted here.
  std::int64_t collisions = 0;
};

struct LayerScore {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;
  double precision = 0.0;  // 0 when tp+fp == 0
  double recall = 0.0;     // 0 when tp+fn == 0
  double f1 = 0.0;         // harmonic mean, 0 when p+r == 0
};

struct ScoreReport {
  ScoreMode mode = ScoreMode::raw;
  double threshold = 0.0;
  LayerScore frames;
  LayerScore roles;
  // Diagnostics: same-layer same-token claims seen while painting.
  std::int64_t gold_collisions = 0;
  std::int64_t pred_collisions = 0;
};

// Keeps an annotation iff its frame confidence >= threshold; a kept
// annotation's role fill survives iff that fill's confidence >= threshold.
// Threshold 0 is the identity. Throws Error(usage) if out of [0,1].
PredictionSet filter_by_confidence(const PredictionSet& preds,
                                   double threshold);

// Paints annotation spans into per-token labels. Target spans emit B-f/I-f
// on the frame layer, role fills B-f:r/I-f:r on the role layer. When spans
// collide on a token, the claim with the lexicographically smaller
// (frame, start) key wins token by token; the key is extended to
// (frame, start, end, role) for a total order. Interrupted spans restart
// with B- so each layer stays BIO well-formed.
LabelSequence to_label_sequence(const Sentence& sentence,
                                const std::vector<Annotation>& annotations);

// Drops predicted annotations whose target shares no token with any gold
// target of the same sentence. Gold is never added, only predictions removed.
PredictionSet restrict_to_gold_predicates(
    const PredictionSet& preds, const std::vector<Annotation>& gold);

// Full pipeline: filter_by_confidence, then (in GOLD_PRED mode)
// restrict_to_gold_predicates, then token-level comparison of both layers.
// Sentences absent from preds count as all-O predictions. Throws Error on
// unknown sentence ids or out-of-bounds spans.
ScoreReport score(const Corpus& gold_corpus,
                  const std::map<std::string, PredictionSet>& preds,
                  ScoreMode mode, double threshold);

// JSON form of one report: counts as integers, P/R/F rounded to 4 decimals,
// collision diagnostics included.
std::string score_report_to_json(const ScoreReport& report);

}  // namespace framekit

#endif  // FRAMEKIT_EVALUATE_HPP_
