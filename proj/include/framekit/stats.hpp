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

#ifndef FRAMEKIT_STATS_HPP_
#define FRAMEKIT_STATS_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "framekit/corpus.hpp"

namespace framekit {

struct FrameCount {
  std::string frame_name;
  std::int64_t count;
};

struct LuCount {
  std::string lu_id;
  std::vector<std::string> languages;  // sorted; one entry unless merged
  std::int64_t count;
};

// Descriptive statistics over a corpus. All counts except unique_sentences
// are computed over annotations. Top lists are sorted by descending count,
// ties broken lexicographically by name.
struct StatsReport {
  std::int64_t total_annotations = 0;
  std::int64_t unique_sentences = 0;
  double annotations_per_sentence = 0.0;  // full precision; 0 when empty
  std::map<std::string, std::int64_t> by_language;
  std::vector<FrameCount> top_by_frame;
  std::vector<LuCount> top_by_lu;
  std::int64_t frame_count_with_exemplars = 0;
};

// merge_lu_languages merges LU rows that share an id across languages into
// one entry with the summed count (the "corner.n EN/FR" reading); by default
// every (id, language) pair is a separate entry.
StatsReport corpus_stats(const Corpus& corpus, int top_k,
                         bool merge_lu_languages = false);

// Number of distinct frame names occurring in at least one annotation.
std::int64_t count_frames_with_exemplars(const Corpus& corpus);

std::string render_stats_table(const StatsReport& report);
std::string stats_to_json(const StatsReport& report);

}  // namespace framekit

#endif  // FRAMEKIT_STATS_HPP_
