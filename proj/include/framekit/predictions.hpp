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
// The prediction interchange format: one JSONL object per predicted
// annotation, {sentence_id, target:{start,end}, frame, roles:[{role, start,
// end, confidence}], frame_confidence, provenance}. Any system that writes
// this schema can be scored; provenance is the only thing telling systems
// apart. See docs/formats.md.

#ifndef FRAMEKIT_PREDICTIONS_HPP_
#define FRAMEKIT_PREDICTIONS_HPP_

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "framekit/corpus.hpp"

namespace framekit {

// Predictions for one sentence, all from the same system.
struct PredictionSet {
  std::vector<Annotation> annotations;
  std::string provenance;
};

// One line of a prediction file.
struct PredictionRow {
  Annotation annotation;
  std::string provenance;
};

std::vector<PredictionRow> load_predictions(const std::string& path);
std::vector<PredictionRow> read_predictions(
    std::istream& in, const std::string& source_name = "<stream>");

void save_predictions(const std::vector<PredictionRow>& rows,
                      const std::string& path);
void write_predictions(const std::vector<PredictionRow>& rows,
                       std::ostream& out);

// Groups rows per sentence. Rows keep file order within a sentence.
std::map<std::string, PredictionSet> group_by_sentence(
    const std::vector<PredictionRow>& rows);

// Distinct provenance strings in file order of first appearance.
std::vector<std::string> provenances(const std::vector<PredictionRow>& rows);

}  // namespace framekit

#endif  // FRAMEKIT_PREDICTIONS_HPP_
