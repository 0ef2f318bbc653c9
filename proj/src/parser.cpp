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

#include "framekit/parser.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "framekit/error.hpp"
#include "jsonl_util.hpp"

namespace framekit {

using jsonl::ojson;

namespace {

constexpr int kModelVersion = 1;

// Case folding is plain ASCII; non-ASCII bytes pass through unchanged, so
// multibyte UTF-8 forms match themselves exactly.
std::string lower_ascii(const std::string& s) {
  std::string out = s;
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<std::string> lower_tokens(const std::vector<std::string>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const std::string& token : tokens) out.push_back(lower_ascii(token));
  return out;
}

std::string join(const std::vector<std::string>& tokens, std::size_t begin,
                 std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (i > begin) out += " ";
    out += tokens[i];
  }
  return out;
}

// Feature template "v1". Frame stage: the target form, the sentence
// language, and a two-token window on each side of the target span.
std::vector<std::string> frame_features(const std::vector<std::string>& lowered,
                                        const Span& target,
                                        const std::string& language) {
  auto window = [&](std::ptrdiff_t offset) -> std::string {
    std::ptrdiff_t pos = offset < 0
                             ? static_cast<std::ptrdiff_t>(target.start) + offset
                             : static_cast<std::ptrdiff_t>(target.end) + offset - 1;
    if (pos < 0) return "<s>";
    if (pos >= static_cast<std::ptrdiff_t>(lowered.size())) return "</s>";
    return lowered[static_cast<std::size_t>(pos)];
  };
  std::string form = join(lowered, target.start, target.end);
  return {
      "form=" + form,
      "lang=" + language,
      "form|lang=" + form + "|" + language,
      "w-2=" + window(-2),
      "w-1=" + window(-1),
      "w+1=" + window(+1),
      "w+2=" + window(+2),
  };
}

// Role stage: token form, bucketed position relative to the target span
// (negative before, "in" inside, positive after, clamped to +/-5), the frame,
// and conjunctions of those.
std::string relative_bucket(std::size_t t, const Span& target) {
  if (t >= target.start && t < target.end) return "in";
  std::ptrdiff_t d;
  if (t < target.start) {
    d = static_cast<std::ptrdiff_t>(t) -
        static_cast<std::ptrdiff_t>(target.start);
  } else {
    d = static_cast<std::ptrdiff_t>(t) -
        static_cast<std::ptrdiff_t>(target.end) + 1;
  }
  d = std::clamp<std::ptrdiff_t>(d, -5, 5);
  return std::to_string(d);
}

std::vector<std::string> role_features(const std::vector<std::string>& lowered,
                                       std::size_t t, const Span& target,
                                       const std::string& frame) {
  std::string rel = relative_bucket(t, target);
  return {
      "tok=" + lowered[t],
      "rel=" + rel,
      "frame=" + frame,
      "frame|rel=" + frame + "|" + rel,
      "tok|rel=" + lowered[t] + "|" + rel,
  };
}

// Perceptron with lazily-accumulated weight averaging. step counts processed
// examples; averaging sums the weight in effect entering each example.
struct AveragedPerceptron {
  struct Cell {
    double weight = 0.0;
    double summed = 0.0;
    std::int64_t last = 0;
  };
  std::map<std::string, std::map<std::string, Cell>> table;
  std::int64_t step = 0;

  double raw_score(const std::vector<std::string>& features,
                   const std::string& label) const {
    double score = 0.0;
    for (const std::string& feature : features) {
      auto row = table.find(feature);
      if (row == table.end()) continue;
      auto cell = row->second.find(label);
      if (cell != row->second.end()) score += cell->second.weight;
    }
    return score;
  }

  void bump(const std::vector<std::string>& features, const std::string& label,
            double delta) {
    for (const std::string& feature : features) {
      Cell& cell = table[feature][label];
      cell.summed += cell.weight * static_cast<double>(step - cell.last);
      cell.last = step;
      cell.weight += delta;
    }
  }

  void tick() { ++step; }

  std::map<std::string, std::map<std::string, double>> average() const {
    std::map<std::string, std::map<std::string, double>> out;
    if (step == 0) return out;
    for (const auto& [feature, row] : table) {
      for (const auto& [label, cell] : row) {
        double total = cell.summed +
                       cell.weight * static_cast<double>(step - cell.last);
        double avg = total / static_cast<double>(step);
        if (avg != 0.0) out[feature][label] = avg;
      }
    }
    return out;
  }
};

double model_score(const std::map<std::string, std::map<std::string, double>>&
                       weights,
                   const std::vector<std::string>& features,
                   const std::string& label) {
  double score = 0.0;
  for (const std::string& feature : features) {
    auto row = weights.find(feature);
    if (row == weights.end()) continue;
    auto cell = row->second.find(label);
    if (cell != row->second.end()) score += cell->second;
  }
  return score;
}

std::vector<double> softmax(const std::vector<double>& scores) {
  double max_score = *std::max_element(scores.begin(), scores.end());
  std::vector<double> probs(scores.size());
  double z = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    probs[i] = std::exp(scores[i] - max_score);
    z += probs[i];
  }
  for (double& p : probs) p /= z;
  return probs;
}

std::int64_t licensed_frame_count(const std::vector<LexiconSense>& senses,
                                  const std::string& frame) {
  std::int64_t count = 0;
  for (const LexiconSense& sense : senses) {
    if (sense.frame_name == frame) count += sense.count;
  }
  return count;
}

std::vector<std::string> licensed_frames(
    const std::vector<LexiconSense>& senses) {
  std::set<std::string> frames;
  for (const LexiconSense& sense : senses) frames.insert(sense.frame_name);
  return {frames.begin(), frames.end()};
}

// Argmax with the documented tie-break: score, then lexicon count, then
// lexicographically smaller frame name.
template <typename ScoreFn>
std::size_t pick_frame(const std::vector<std::string>& frames,
                       const std::vector<LexiconSense>& senses,
                       ScoreFn&& score_of) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < frames.size(); ++i) {
    double si = score_of(frames[i]);
    double sb = score_of(frames[best]);
    if (si > sb) {
      best = i;
    } else if (si == sb) {
      std::int64_t ci = licensed_frame_count(senses, frames[i]);
      std::int64_t cb = licensed_frame_count(senses, frames[best]);
      // frames is sorted, so on a full tie the earlier (smaller) name stays.
      if (ci > cb) best = i;
    }
  }
  return best;
}

// Candidate role labels for a frame: O first, then B-/I- per role in sorted
// order. Ties in the argmax keep the earliest candidate, so O wins at zero.
std::vector<std::string> role_candidates(
    const std::vector<std::string>& roles) {
  std::vector<std::string> candidates = {"O"};
  for (const std::string& role : roles) {
    candidates.push_back("B-" + role);
    candidates.push_back("I-" + role);
  }
  return candidates;
}

// Gold per-token BIO labels for one annotation's role fills. Fills are
// painted in (start, role, end) order, first claim wins, and interrupted
// spans restart with B- (same discipline the evaluator uses).
std::vector<std::string> gold_role_labels(const Annotation& annotation,
                                          std::size_t token_count) {
  std::vector<const RoleFill*> fills;
  for (const RoleFill& fill : annotation.role_fills) fills.push_back(&fill);
  std::sort(fills.begin(), fills.end(),
            [](const RoleFill* a, const RoleFill* b) {
              return std::tie(a->span.start, a->role_name, a->span.end) <
                     std::tie(b->span.start, b->role_name, b->span.end);
            });
  std::vector<int> owner(token_count, -1);
  for (std::size_t i = 0; i < fills.size(); ++i) {
    for (std::size_t t = fills[i]->span.start; t < fills[i]->span.end; ++t) {
      if (owner[t] == -1) owner[t] = static_cast<int>(i);
    }
  }
  std::vector<std::string> labels(token_count, "O");
  for (std::size_t t = 0; t < token_count; ++t) {
    if (owner[t] == -1) continue;
    bool run_start = (t == 0) || owner[t - 1] != owner[t];
    labels[t] = (run_start ? "B-" : "I-") +
                fills[static_cast<std::size_t>(owner[t])]->role_name;
  }
  return labels;
}

struct TrainExample {
  const Annotation* annotation;
  const Sentence* sentence;
  std::vector<std::string> lowered;
  std::vector<std::string> frame_feats;
  const std::vector<LexiconSense>* senses;
  std::vector<std::string> candidates;       // licensed frames, sorted
  std::vector<std::string> role_labels;      // gold BIO per token
  std::vector<std::string> role_candidates;  // O + BIO over frame's roles
};

}  // namespace

std::size_t Lexicon::max_form_length(const std::string& language) const {
  auto it = entries.find(language);
  if (it == entries.end()) return 0;
  std::size_t longest = 0;
  for (const auto& [form, senses] : it->second) {
    longest = std::max(longest, form.size());
  }
  return longest;
}

std::size_t Lexicon::size() const {
  std::size_t total = 0;
  for (const auto& [language, forms] : entries) total += forms.size();
  return total;
}

TrainedParser train(const Corpus& train_corpus, int epochs,
                    std::uint64_t seed) {
  if (epochs <= 0) {
    throw Error(ErrorKind::usage, "epochs must be positive");
  }
  if (train_corpus.kind != CorpusKind::exemplar) {
    throw Error(ErrorKind::data, "training corpus must be exemplar kind");
  }
  if (train_corpus.annotations.empty()) {
    throw Error(ErrorKind::data, "training corpus has no annotations");
  }

  TrainedParser parser;
  parser.seed = seed;
  parser.epochs = epochs;
  parser.model.feature_template = kFeatureTemplate;

  // Pass 1: lexicon over gold target forms, and per-frame role inventories.
  std::map<std::string, std::set<std::string>> frame_roles;
  for (const Annotation& annotation : train_corpus.annotations) {
    const Sentence* sentence = train_corpus.find_sentence(annotation.sentence_id);
    std::vector<std::string> lowered = lower_tokens(sentence->tokens);
    std::vector<std::string> form(lowered.begin() + annotation.target.start,
                                  lowered.begin() + annotation.target.end);
    auto& senses = parser.lexicon.entries[sentence->language][form];
    std::string lu_id = annotation.lu_id.value_or("");
    auto it = std::find_if(senses.begin(), senses.end(),
                           [&](const LexiconSense& sense) {
                             return sense.lu_id == lu_id &&
                                    sense.frame_name == annotation.frame_name;
                           });
    if (it == senses.end()) {
      senses.push_back({lu_id, annotation.frame_name, 1});
    } else {
      ++it->count;
    }
    auto& roles = frame_roles[annotation.frame_name];
    for (const RoleFill& fill : annotation.role_fills) {
      roles.insert(fill.role_name);
    }
  }
  for (auto& [language, forms] : parser.lexicon.entries) {
    for (auto& [form, senses] : forms) {
      std::sort(senses.begin(), senses.end(),
                [](const LexiconSense& a, const LexiconSense& b) {
                  return std::tie(a.lu_id, a.frame_name) <
                         std::tie(b.lu_id, b.frame_name);
                });
    }
  }
  for (const auto& [frame, roles] : frame_roles) {
    parser.model.frame_roles[frame] = {roles.begin(), roles.end()};
  }

  // Precompute per-annotation training material in sorted order.
  std::vector<const Annotation*> ordered;
  for (const Annotation& annotation : train_corpus.annotations) {
    ordered.push_back(&annotation);
  }
  std::sort(ordered.begin(), ordered.end(),
            [](const Annotation* a, const Annotation* b) {
              return std::tie(a->sentence_id, a->target.start, a->frame_name) <
                     std::tie(b->sentence_id, b->target.start, b->frame_name);
            });

  std::vector<TrainExample> examples;
  examples.reserve(ordered.size());
  for (const Annotation* annotation : ordered) {
    const Sentence* sentence = train_corpus.find_sentence(annotation->sentence_id);
    TrainExample example;
    example.annotation = annotation;
    example.sentence = sentence;
    example.lowered = lower_tokens(sentence->tokens);
    example.frame_feats =
        frame_features(example.lowered, annotation->target, sentence->language);
    std::vector<std::string> form(
        example.lowered.begin() + annotation->target.start,
        example.lowered.begin() + annotation->target.end);
    example.senses =
        &parser.lexicon.entries.at(sentence->language).at(form);
    example.candidates = licensed_frames(*example.senses);
    example.role_labels =
        gold_role_labels(*annotation, sentence->tokens.size());
    example.role_candidates =
        role_candidates(parser.model.frame_roles.at(annotation->frame_name));
    examples.push_back(std::move(example));
  }

  AveragedPerceptron frame_weights;
  AveragedPerceptron role_weights;
  std::vector<std::size_t> order(examples.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  std::mt19937_64 rng(seed);
  for (int epoch = 0; epoch < epochs; ++epoch) {
    for (std::size_t i = order.size() - 1; i > 0; --i) {
      std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
      std::swap(order[i], order[j]);
    }
    for (std::size_t index : order) {
      const TrainExample& example = examples[index];
      const std::string& gold_frame = example.annotation->frame_name;

      if (example.candidates.size() > 1) {
        std::size_t picked = pick_frame(
            example.candidates, *example.senses, [&](const std::string& f) {
              return frame_weights.raw_score(example.frame_feats, f);
            });
        const std::string& predicted = example.candidates[picked];
        if (predicted != gold_frame) {
          frame_weights.bump(example.frame_feats, gold_frame, +1.0);
          frame_weights.bump(example.frame_feats, predicted, -1.0);
        }
      }
      frame_weights.tick();

      // Role decisions are conditioned on the gold frame during training
      // (the predicted frame is not available yet); prediction substitutes
      // its own frame choice.
      for (std::size_t t = 0; t < example.lowered.size(); ++t) {
        std::vector<std::string> feats = role_features(
            example.lowered, t, example.annotation->target, gold_frame);
        std::size_t best = 0;
        for (std::size_t c = 1; c < example.role_candidates.size(); ++c) {
          if (role_weights.raw_score(feats, example.role_candidates[c]) >
              role_weights.raw_score(feats, example.role_candidates[best])) {
            best = c;
          }
        }
        const std::string& predicted = example.role_candidates[best];
        const std::string& gold = example.role_labels[t];
        if (predicted != gold) {
          role_weights.bump(feats, gold, +1.0);
          role_weights.bump(feats, predicted, -1.0);
        }
        role_weights.tick();
      }
    }
  }

  parser.model.frame_weights = frame_weights.average();
  parser.model.role_weights = role_weights.average();

  // Training-set accuracy with the averaged weights, for the log and for
  // separability checks.
  std::int64_t frame_hits = 0;
  std::int64_t role_hits = 0;
  std::int64_t role_total = 0;
  for (const TrainExample& example : examples) {
    std::size_t picked = pick_frame(
        example.candidates, *example.senses, [&](const std::string& f) {
          return model_score(parser.model.frame_weights, example.frame_feats,
                             f);
        });
    if (example.candidates[picked] == example.annotation->frame_name) {
      ++frame_hits;
    }
    for (std::size_t t = 0; t < example.lowered.size(); ++t) {
      std::vector<std::string> feats =
          role_features(example.lowered, t, example.annotation->target,
                        example.annotation->frame_name);
      std::size_t best = 0;
      for (std::size_t c = 1; c < example.role_candidates.size(); ++c) {
        if (model_score(parser.model.role_weights, feats,
                        example.role_candidates[c]) >
            model_score(parser.model.role_weights, feats,
                        example.role_candidates[best])) {
          best = c;
        }
      }
      if (example.role_candidates[best] == example.role_labels[t]) {
        ++role_hits;
      }
      ++role_total;
    }
  }
  parser.stats.frame_train_accuracy =
      static_cast<double>(frame_hits) / static_cast<double>(examples.size());
  parser.stats.role_token_train_accuracy =
      role_total == 0 ? 0.0
                      : static_cast<double>(role_hits) /
                            static_cast<double>(role_total);
  return parser;
}

PredictionSet predict(const TrainedParser& parser, const Sentence& sentence) {
  PredictionSet out;
  out.provenance = kBaselineProvenance;

  auto lang_it = parser.lexicon.entries.find(sentence.language);
  if (lang_it == parser.lexicon.entries.end()) return out;
  const auto& forms = lang_it->second;
  const std::size_t max_len = parser.lexicon.max_form_length(sentence.language);
  const std::size_t n = sentence.tokens.size();
  std::vector<std::string> lowered = lower_tokens(sentence.tokens);

  std::size_t i = 0;
  while (i < n) {
    const std::vector<LexiconSense>* senses = nullptr;
    std::size_t matched_len = 0;
    for (std::size_t len = std::min(max_len, n - i); len >= 1; --len) {
      std::vector<std::string> window(lowered.begin() + i,
                                      lowered.begin() + i + len);
      auto it = forms.find(window);
      if (it != forms.end()) {
        senses = &it->second;
        matched_len = len;
        break;
      }
    }
    if (senses == nullptr) {
      ++i;
      continue;
    }

    Annotation annotation;
    annotation.sentence_id = sentence.id;
    annotation.target = {i, i + matched_len};

    // Stage 2: frame over the licensed candidates.
    std::vector<std::string> candidates = licensed_frames(*senses);
    std::vector<std::string> feats =
        frame_features(lowered, annotation.target, sentence.language);
    std::vector<double> scores;
    scores.reserve(candidates.size());
    for (const std::string& frame : candidates) {
      scores.push_back(model_score(parser.model.frame_weights, feats, frame));
    }
    std::size_t picked =
        pick_frame(candidates, *senses, [&](const std::string& f) {
          return model_score(parser.model.frame_weights, feats, f);
        });
    annotation.frame_name = candidates[picked];
    annotation.frame_confidence = softmax(scores)[picked];

    // The lexicon entry also supplies the lu: highest count, then smallest id.
    const LexiconSense* chosen_lu = nullptr;
    for (const LexiconSense& sense : *senses) {
      if (sense.frame_name != annotation.frame_name) continue;
      if (chosen_lu == nullptr || sense.count > chosen_lu->count ||
          (sense.count == chosen_lu->count && sense.lu_id < chosen_lu->lu_id)) {
        chosen_lu = &sense;
      }
    }
    if (chosen_lu != nullptr && !chosen_lu->lu_id.empty()) {
      annotation.lu_id = chosen_lu->lu_id;
    }

    // Stage 3: greedy BIO over the frame's observed roles, then repair.
    auto roles_it = parser.model.frame_roles.find(annotation.frame_name);
    if (roles_it != parser.model.frame_roles.end() &&
        !roles_it->second.empty()) {
      std::vector<std::string> candidates_bio = role_candidates(roles_it->second);
      std::vector<std::string> labels(n);
      std::vector<double> label_prob(n);
      for (std::size_t t = 0; t < n; ++t) {
        std::vector<std::string> role_feats =
            role_features(lowered, t, annotation.target, annotation.frame_name);
        std::vector<double> role_scores;
        role_scores.reserve(candidates_bio.size());
        for (const std::string& label : candidates_bio) {
          role_scores.push_back(
              model_score(parser.model.role_weights, role_feats, label));
        }
        std::size_t best = 0;
        for (std::size_t c = 1; c < role_scores.size(); ++c) {
          if (role_scores[c] > role_scores[best]) best = c;
        }
        labels[t] = candidates_bio[best];
        label_prob[t] = softmax(role_scores)[best];
      }
      // Repair: an I-X not continuing B-X/I-X becomes B-X.
      for (std::size_t t = 0; t < n; ++t) {
        if (labels[t].rfind("I-", 0) != 0) continue;
        std::string role = labels[t].substr(2);
        bool continues = t > 0 && (labels[t - 1] == "B-" + role ||
                                   labels[t - 1] == "I-" + role);
        if (!continues) labels[t] = "B-" + role;
      }
      for (std::size_t t = 0; t < n; ++t) {
        if (labels[t].rfind("B-", 0) != 0) continue;
        std::string role = labels[t].substr(2);
        std::size_t end = t + 1;
        double confidence = label_prob[t];
        while (end < n && labels[end] == "I-" + role) {
          confidence = std::min(confidence, label_prob[end]);
          ++end;
        }
        annotation.role_fills.push_back({role, {t, end}, confidence});
        t = end - 1;
      }
    }

    out.annotations.push_back(std::move(annotation));
    i += matched_len;
  }
  return out;
}

void write_model(const TrainedParser& parser, std::ostream& out) {
  ojson obj;
  obj["format"] = "framekit-model";
  obj["version"] = kModelVersion;
  obj["feature_template"] = parser.model.feature_template;
  obj["seed"] = parser.seed;
  obj["epochs"] = parser.epochs;

  ojson lexicon = ojson::array();
  for (const auto& [language, forms] : parser.lexicon.entries) {
    for (const auto& [form, senses] : forms) {
      ojson entry;
      entry["language"] = language;
      entry["form"] = form;
      ojson sense_list = ojson::array();
      for (const LexiconSense& sense : senses) {
        ojson sense_obj;
        sense_obj["lu_id"] = sense.lu_id;
        sense_obj["frame_name"] = sense.frame_name;
        sense_obj["count"] = sense.count;
        sense_list.push_back(std::move(sense_obj));
      }
      entry["senses"] = std::move(sense_list);
      lexicon.push_back(std::move(entry));
    }
  }
  obj["lexicon"] = std::move(lexicon);

  ojson frame_roles = ojson::object();
  for (const auto& [frame, roles] : parser.model.frame_roles) {
    frame_roles[frame] = roles;
  }
  obj["frame_roles"] = std::move(frame_roles);

  auto weights_to_json = [](const std::map<std::string,
                                           std::map<std::string, double>>& w) {
    ojson out_obj = ojson::object();
    for (const auto& [feature, row] : w) {
      ojson row_obj = ojson::object();
      for (const auto& [label, weight] : row) {
        row_obj[label] = weight;
      }
      out_obj[feature] = std::move(row_obj);
    }
    return out_obj;
  };
  obj["frame_weights"] = weights_to_json(parser.model.frame_weights);
  obj["role_weights"] = weights_to_json(parser.model.role_weights);

  out << obj.dump(2) << "\n";
}

void save_model(const TrainedParser& parser, const std::string& path) {
  std::ofstream out = jsonl::open_output(path);
  write_model(parser, out);
  if (!out) {
    throw Error(ErrorKind::io, "failed writing " + path);
  }
}

TrainedParser read_model(std::istream& in, const std::string& source_name) {
  ojson obj = ojson::parse(in, nullptr, /*allow_exceptions=*/false);
  if (obj.is_discarded() || !obj.is_object()) {
    throw Error(ErrorKind::parse, source_name + ": malformed model file");
  }
  if (!obj.contains("format") || obj["format"] != "framekit-model") {
    throw Error(ErrorKind::version,
                source_name + ": not a framekit model file");
  }
  if (!obj.contains("version") ||
      obj["version"].get<int>() != kModelVersion) {
    throw Error(ErrorKind::version,
                source_name + ": unsupported model version (expected " +
                    std::to_string(kModelVersion) + ")");
  }

  TrainedParser parser;
  parser.model.feature_template = obj.value("feature_template", "");
  if (parser.model.feature_template != kFeatureTemplate) {
    throw Error(ErrorKind::version,
                source_name + ": feature template \"" +
                    parser.model.feature_template + "\" does not match \"" +
                    kFeatureTemplate + "\"");
  }
  parser.seed = obj.value("seed", std::uint64_t{0});
  parser.epochs = obj.value("epochs", 0);

  try {
    for (const ojson& entry : obj.at("lexicon")) {
      std::string language = entry.at("language").get<std::string>();
      std::vector<std::string> form =
          entry.at("form").get<std::vector<std::string>>();
      std::vector<LexiconSense> senses;
      for (const ojson& sense_obj : entry.at("senses")) {
        LexiconSense sense;
        sense.lu_id = sense_obj.at("lu_id").get<std::string>();
        sense.frame_name = sense_obj.at("frame_name").get<std::string>();
        sense.count = sense_obj.at("count").get<std::int64_t>();
        senses.push_back(std::move(sense));
      }
      parser.lexicon.entries[language][form] = std::move(senses);
    }
    for (const auto& [frame, roles] : obj.at("frame_roles").items()) {
      parser.model.frame_roles[frame] =
          roles.get<std::vector<std::string>>();
    }
    auto weights_from_json = [](const ojson& w) {
      std::map<std::string, std::map<std::string, double>> out;
      for (const auto& [feature, row] : w.items()) {
        for (const auto& [label, weight] : row.items()) {
          out[feature][label] = weight.get<double>();
        }
      }
      return out;
    };
    parser.model.frame_weights = weights_from_json(obj.at("frame_weights"));
    parser.model.role_weights = weights_from_json(obj.at("role_weights"));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse,
                source_name + ": malformed model file (" + e.what() + ")");
  }
  return parser;
}

TrainedParser load_model(const std::string& path) {
  std::ifstream in = jsonl::open_input(path);
  return read_model(in, path);
}

}  // namespace framekit
