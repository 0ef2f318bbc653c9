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
// Deterministic synthetic corpora used by the acceptance suite.

#ifndef FRAMEKIT_TESTS_SUPPORT_SYNTHETIC_HPP_
#define FRAMEKIT_TESTS_SUPPORT_SYNTHETIC_HPP_

#include <cstdint>
#include <map>
#include <string>

#include "framekit/corpus.hpp"
#include "framekit/predictions.hpp"

namespace testsupport {

// Full-scale synthetic stand-in for the real football-domain export, with
// hand-computed expected statistics:
//   8,342 annotations over 7,452 unique sentences
//   by language: de 3,730 / en 2,374 / fr 2,238
//   top frames: Shot 597, Pass 492, Goal 448, Player 313, Save 256
//   top LUs (merged across languages):
//     treffen.v (de) 25, corner.n (en/fr) 22 = 11 + 11,
//     spielen.v (de) 20, passer.v (fr) 17, win.v (en) 16
//   106 frames with at least one exemplar (4 more defined without any)
framekit::Corpus synthetic_kicktionary();

// 200 sentences from a fixed generative grammar: every verb form maps to
// exactly one frame, the Doer role always immediately precedes the target
// and the two-token Object always starts two tokens after it. Linearly
// separable by construction.
framekit::Corpus grammar_corpus(std::size_t n_sentences = 200);

// A miniature random gold corpus plus predictions (<= 10 sentences, <= 15
// tokens). Within one side of one sentence, target spans are pairwise
// disjoint and role spans are pairwise disjoint (the shape exemplar
// annotation actually has); across sides everything may overlap. Prediction
// confidences are drawn from {0.3, 0.6, 1.0}.
struct RandomPair {
  framekit::Corpus gold;
  std::map<std::string, framekit::PredictionSet> preds;
};
RandomPair random_pair(std::uint64_t seed);

}  // namespace testsupport

#endif  // FRAMEKIT_TESTS_SUPPORT_SYNTHETIC_HPP_
