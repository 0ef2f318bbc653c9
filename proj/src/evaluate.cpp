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

#include "framekit/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

#include "framekit/error.hpp"
#include "jsonl_util.hpp"

namespace framekit {

std::string to_string(ScoreMode mode) {
  return mode == ScoreMode::raw ? "raw" : "gold_pred";
}

PredictionSet filter_by_confidence(const PredictionSet& preds,
                                   double threshold) {
  if (threshold < 0.0 || threshold > 1.0) {
    throw Error(ErrorKind::usage, "confidence threshold must lie in [0,1]");
  }
  PredictionSet result;
  result.provenance = preds.provenance;
  for (const Annotation& annotation : preds.annotations) {
    if (annotation.frame_confidence < threshold) continue;
    Annotation kept = annotation;
    kept.role_fills.clear();
    for (const RoleFill& fill : annotation.role_fills) {
      if (fill.confidence >= threshold) kept.role_fills.push_back(fill);
    }
    result.annotations.push_back(std::move(kept));
  }
  return result;
}

namespace {

// One span to paint: sort_key orders competing claims, content is the label
// without its B-/I- prefix.
struct PaintItem {
  std::tuple<std::string, std::size_t, std::size_t, std::string> sort_key;
  Span span;
  std::string content;
};

void paint(std::vector<PaintItem>& items, std::size_t token_count,
           std::vector<std::string>& layer, std::int64_t* collisions) {
  std::sort(items.begin(), items.end(),
            [](const PaintItem& a, const PaintItem& b) {
              return a.sort_key < b.sort_key;
            });
  std::vector<int> owner(token_count, -1);
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t t = items[i].span.start; t < items[i].span.end; ++t) {
      if (owner[t] == -1) {
        owner[t] = static_cast<int>(i);
      } else {
        ++*collisions;
      }
    }
  }
  layer.assign(token_count, "O");
  for (std::size_t t = 0; t < token_count; ++t) {
    if (owner[t] == -1) continue;
    bool run_start = (t == 0) || owner[t - 1] != owner[t];
    layer[t] = (run_start ? "B-" : "I-") +
               items[static_cast<std::size_t>(owner[t])].content;
  }
}

void check_bounds(const Span& span, std::size_t token_count,
                  const std::string& sentence_id, const std::string& what) {
  if (span.start >= span.end || span.end > token_count) {
    std::ostringstream msg;
    msg << "sentence \"" << sentence_id << "\": " << what << " span ["
        << span.start << "," << span.end << ") out of bounds (" << token_count
        << " tokens)";
    throw Error(ErrorKind::span, msg.str());
  }
}

void tally(const std::vector<std::string>& gold,
           const std::vector<std::string>& pred, LayerScore* layer) {
  for (std::size_t t = 0; t < gold.size(); ++t) {
    if (pred[t] != "O") {
      if (pred[t] == gold[t]) {
        ++layer->tp;
      } else {
        ++layer->fp;
      }
    }
    if (gold[t] != "O" && gold[t] != pred[t]) {
      ++layer->fn;
    }
  }
}

void finish(LayerScore* layer) {
  layer->precision =
      layer->tp + layer->fp == 0
          ? 0.0
          : static_cast<double>(layer->tp) /
                static_cast<double>(layer->tp + layer->fp);
  layer->recall = layer->tp + layer->fn == 0
                      ? 0.0
                      : static_cast<double>(layer->tp) /
                            static_cast<double>(layer->tp + layer->fn);
  layer->f1 = layer->precision + layer->recall == 0.0
                  ? 0.0
                  : 2.0 * layer->precision * layer->recall /
                        (layer->precision + layer->recall);
}

}  // namespace

LabelSequence to_label_sequence(const Sentence& sentence,
                                const std::vector<Annotation>& annotations) {
  const std::size_t n = sentence.tokens.size();
  std::vector<PaintItem> frame_items;
  std::vector<PaintItem> role_items;
  for (const Annotation& annotation : annotations) {
    check_bounds(annotation.target, n, sentence.id, "target");
    frame_items.push_back(
        {{annotation.frame_name, annotation.target.start,
          annotation.target.end, ""},
         annotation.target,
         annotation.frame_name});
    for (const RoleFill& fill : annotation.role_fills) {
      check_bounds(fill.span, n, sentence.id, "role \"" + fill.role_name + "\"");
      role_items.push_back(
          {{annotation.frame_name, fill.span.start, fill.span.end,
            fill.role_name},
           fill.span,
           annotation.frame_name + ":" + fill.role_name});
    }
  }

  LabelSequence sequence;
  paint(frame_items, n, sequence.frame_layer, &sequence.collisions);
  paint(role_items, n, sequence.role_layer, &sequence.collisions);
  return sequence;
}

PredictionSet restrict_to_gold_predicates(
    const PredictionSet& preds, const std::vector<Annotation>& gold) {
  PredictionSet result;
  result.provenance = preds.provenance;
  for (const Annotation& annotation : preds.annotations) {
    bool overlaps_gold =
        std::any_of(gold.begin(), gold.end(), [&](const Annotation& g) {
          return annotation.target.overlaps(g.target);
        });
    if (overlaps_gold) result.annotations.push_back(annotation);
  }
  return result;
}

ScoreReport score(const Corpus& gold_corpus,
                  const std::map<std::string, PredictionSet>& preds,
                  ScoreMode mode, double threshold) {
  if (threshold < 0.0 || threshold > 1.0) {
    throw Error(ErrorKind::usage, "confidence threshold must lie in [0,1]");
  }
  for (const auto& [sentence_id, unused] : preds) {
    if (gold_corpus.find_sentence(sentence_id) == nullptr) {
      throw Error(ErrorKind::reference,
                  "predictions reference unknown sentence \"" + sentence_id +
                      "\"");
    }
  }

  std::map<std::string, std::vector<Annotation>> gold_by_sentence;
  for (const Annotation& annotation : gold_corpus.annotations) {
    gold_by_sentence[annotation.sentence_id].push_back(annotation);
  }

  ScoreReport report;
  report.mode = mode;
  report.threshold = threshold;
  static const std::vector<Annotation> kNoAnnotations;
  for (const Sentence& sentence : gold_corpus.sentences) {
    auto gold_it = gold_by_sentence.find(sentence.id);
    const std::vector<Annotation>& gold_annotations =
        gold_it == gold_by_sentence.end() ? kNoAnnotations : gold_it->second;

    PredictionSet prediction;
    auto pred_it = preds.find(sentence.id);
    if (pred_it != preds.end()) prediction = pred_it->second;
    prediction = filter_by_confidence(prediction, threshold);
    if (mode == ScoreMode::gold_pred) {
      prediction = restrict_to_gold_predicates(prediction, gold_annotations);
    }

    LabelSequence gold_seq = to_label_sequence(sentence, gold_annotations);
    LabelSequence pred_seq = to_label_sequence(sentence, prediction.annotations);
    report.gold_collisions += gold_seq.collisions;
    report.pred_collisions += pred_seq.collisions;

    tally(gold_seq.frame_layer, pred_seq.frame_layer, &report.frames);
    tally(gold_seq.role_layer, pred_seq.role_layer, &report.roles);
  }

  finish(&report.frames);
  finish(&report.roles);
  return report;
}

std::string score_report_to_json(const ScoreReport& report) {
  auto round4 = [](double v) { return std::round(v * 10000.0) / 10000.0; };
  auto layer = [&](const LayerScore& l) {
    jsonl::ojson obj;
    obj["tp"] = l.tp;
    obj["fp"] = l.fp;
    obj["fn"] = l.fn;
    obj["precision"] = round4(l.precision);
    obj["recall"] = round4(l.recall);
    obj["f1"] = round4(l.f1);
    return obj;
  };
  jsonl::ojson obj;
  obj["mode"] = to_string(report.mode);
  obj["threshold"] = round4(report.threshold);
  obj["frames"] = layer(report.frames);
  obj["roles"] = layer(report.roles);
  obj["diagnostics"] = jsonl::ojson::object();
  obj["diagnostics"]["gold_collisions"] = report.gold_collisions;
  obj["diagnostics"]["pred_collisions"] = report.pred_collisions;
  return obj.dump(2);
}

}  // namespace framekit
