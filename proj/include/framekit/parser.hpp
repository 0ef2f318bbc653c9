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
// Trainable non-neural baseline running the classic three-stage pipeline:
//
//   1. target identification  - longest-match lexicon scan, left to right,
//                               case-insensitive, filtered by language;
//   2. frame identification   - averaged-perceptron classifier over the
//                               frames licensed by the matched lexicon entry;
//   3. role identification    - per-token BIO decisions, decoded greedily
//                               with BIO-consistency repair.
//
// Confidences are softmax probabilities over the candidate set: the frame
// confidence is the chosen frame's probability among licensed frames (exactly
// 1.0 when only one frame is licensed); a role fill's confidence is the
// minimum over its tokens of the chosen label's per-token probability.
// Training is fully deterministic: examples are ordered by sorted sentence
// id, then seed-shuffled per epoch with the same PRNG the splitter uses.

#ifndef FRAMEKIT_PARSER_HPP_
#define FRAMEKIT_PARSER_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "framekit/corpus.hpp"
#include "framekit/predictions.hpp"

namespace framekit {

// One (lu, frame) sense observed for a target form, with its training count.
struct LexiconSense {
  std::string lu_id;
  std::string frame_name;
  std::int64_t count = 0;
};

// (language, lowercased target token sequence) -> observed senses.
struct Lexicon {
  std::map<std::string, std::map<std::vector<std::string>,
                                 std::vector<LexiconSense>>> entries;

  std::size_t max_form_length(const std::string& language) const;
  std::size_t size() const;  // total number of (language, form) entries
};

// Sparse linear weights for both classifier stages.
struct LinearModel {
  std::string feature_template;  // must match kFeatureTemplate on load
  std::map<std::string, std::map<std::string, double>> frame_weights;
  std::map<std::string, std::map<std::string, double>> role_weights;
  // Role inventory observed per frame in training; prediction only proposes
  // roles the frame was seen with.
  std::map<std::string, std::vector<std::string>> frame_roles;
};

struct TrainStats {
  double frame_train_accuracy = 0.0;
  double role_token_train_accuracy = 0.0;
};

struct TrainedParser {
  LinearModel model;
  Lexicon lexicon;
  std::uint64_t seed = 0;
  int epochs = 0;
  TrainStats stats;  // not serialized
};

inline constexpr const char* kFeatureTemplate = "v1";
inline constexpr const char* kBaselineProvenance = "baseline-v1";

// Requires an exemplar corpus with at least one annotation.
TrainedParser train(const Corpus& train_corpus, int epochs,
                    std::uint64_t seed);

// A sentence with no lexicon match yields an empty PredictionSet.
PredictionSet predict(const TrainedParser& parser, const Sentence& sentence);

// Versioned JSON container; load(save(x)) reproduces x and save is
// byte-stable. A wrong version or format tag raises Error(version).
void save_model(const TrainedParser& parser, const std::string& path);
void write_model(const TrainedParser& parser, std::ostream& out);
TrainedParser load_model(const std::string& path);
TrainedParser read_model(std::istream& in,
                         const std::string& source_name = "<stream>");

}  // namespace framekit

#endif  // FRAMEKIT_PARSER_HPP_
