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

#include "framekit/stats.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include "framekit/error.hpp"
#include "jsonl_util.hpp"

namespace framekit {

namespace {

std::string format_fixed(double value, int digits = 4) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << value;
  return out.str();
}

std::string lu_display(const LuCount& lu) {
  std::string langs;
  for (const std::string& language : lu.languages) {
    if (!langs.empty()) langs += "/";
    langs += language;
  }
  return lu.lu_id + " (" + langs + ")";
}

}  // namespace

StatsReport corpus_stats(const Corpus& corpus, int top_k,
                         bool merge_lu_languages) {
  if (top_k <= 0) {
    throw Error(ErrorKind::usage, "top_k must be positive");
  }

  StatsReport report;
  report.total_annotations =
      static_cast<std::int64_t>(corpus.annotations.size());
  report.unique_sentences = static_cast<std::int64_t>(corpus.sentences.size());
  report.annotations_per_sentence =
      report.unique_sentences == 0
          ? 0.0
          : static_cast<double>(report.total_annotations) /
                static_cast<double>(report.unique_sentences);

  std::map<std::string, std::int64_t> frame_counts;
  // Unmerged key: (lu_id, sentence language). Merged key: lu_id alone.
  std::map<std::pair<std::string, std::string>, std::int64_t> lu_counts;
  for (const Annotation& annotation : corpus.annotations) {
    const Sentence* sentence = corpus.find_sentence(annotation.sentence_id);
    if (sentence == nullptr) {
      throw Error(ErrorKind::reference,
                  "stats: unknown sentence \"" + annotation.sentence_id +
                      "\"");
    }
    ++report.by_language[sentence->language];
    ++frame_counts[annotation.frame_name];
    if (annotation.lu_id.has_value()) {
      ++lu_counts[{*annotation.lu_id, sentence->language}];
    }
  }
  report.frame_count_with_exemplars =
      static_cast<std::int64_t>(frame_counts.size());

  std::vector<FrameCount> frames;
  frames.reserve(frame_counts.size());
  for (const auto& [name, count] : frame_counts) {
    frames.push_back({name, count});
  }
  std::sort(frames.begin(), frames.end(),
            [](const FrameCount& a, const FrameCount& b) {
              if (a.count != b.count) return a.count > b.count;
              return a.frame_name < b.frame_name;
            });
  if (frames.size() > static_cast<std::size_t>(top_k)) {
    frames.resize(static_cast<std::size_t>(top_k));
  }
  report.top_by_frame = std::move(frames);

  std::vector<LuCount> lus;
  if (merge_lu_languages) {
    std::map<std::string, LuCount> merged;
    for (const auto& [key, count] : lu_counts) {
      LuCount& entry = merged[key.first];
      entry.lu_id = key.first;
      entry.languages.push_back(key.second);  // map order keeps these sorted
      entry.count += count;
    }
    for (auto& [id, entry] : merged) {
      lus.push_back(std::move(entry));
    }
  } else {
    for (const auto& [key, count] : lu_counts) {
      lus.push_back({key.first, {key.second}, count});
    }
  }
  std::sort(lus.begin(), lus.end(), [](const LuCount& a, const LuCount& b) {
    if (a.count != b.count) return a.count > b.count;
    if (a.lu_id != b.lu_id) return a.lu_id < b.lu_id;
    return a.languages < b.languages;
  });
  if (lus.size() > static_cast<std::size_t>(top_k)) {
    lus.resize(static_cast<std::size_t>(top_k));
  }
  report.top_by_lu = std::move(lus);

  return report;
}

std::int64_t count_frames_with_exemplars(const Corpus& corpus) {
  std::set<std::string> seen;
  for (const Annotation& annotation : corpus.annotations) {
    seen.insert(annotation.frame_name);
  }
  return static_cast<std::int64_t>(seen.size());
}

std::string render_stats_table(const StatsReport& report) {
  std::ostringstream out;
  out << "total_annotations         " << report.total_annotations << "\n";
  out << "unique_sentences          " << report.unique_sentences << "\n";
  out << "annotations_per_sentence  "
      << format_fixed(report.annotations_per_sentence) << "\n";
  out << "frames_with_exemplars     " << report.frame_count_with_exemplars
      << "\n";

  out << "\nby language:\n";
  for (const auto& [language, count] : report.by_language) {
    out << "  " << std::left << std::setw(6) << language << std::right
        << std::setw(8) << count << "\n";
  }

  out << "\ntop frames:\n";
  std::size_t frame_width = 0;
  for (const FrameCount& frame : report.top_by_frame) {
    frame_width = std::max(frame_width, frame.frame_name.size());
  }
  for (const FrameCount& frame : report.top_by_frame) {
    out << "  " << std::left << std::setw(static_cast<int>(frame_width) + 2)
        << frame.frame_name << std::right << std::setw(6) << frame.count
        << "\n";
  }

  out << "\ntop lexical units:\n";
  std::size_t lu_width = 0;
  for (const LuCount& lu : report.top_by_lu) {
    lu_width = std::max(lu_width, lu_display(lu).size());
  }
  for (const LuCount& lu : report.top_by_lu) {
    out << "  " << std::left << std::setw(static_cast<int>(lu_width) + 2)
        << lu_display(lu) << std::right << std::setw(6) << lu.count << "\n";
  }
  return out.str();
}

std::string stats_to_json(const StatsReport& report) {
  jsonl::ojson obj;
  obj["total_annotations"] = report.total_annotations;
  obj["unique_sentences"] = report.unique_sentences;
  obj["annotations_per_sentence"] = report.annotations_per_sentence;
  obj["by_language"] = jsonl::ojson::object();
  for (const auto& [language, count] : report.by_language) {
    obj["by_language"][language] = count;
  }
  obj["top_by_frame"] = jsonl::ojson::array();
  for (const FrameCount& frame : report.top_by_frame) {
    jsonl::ojson entry;
    entry["frame_name"] = frame.frame_name;
    entry["count"] = frame.count;
    obj["top_by_frame"].push_back(std::move(entry));
  }
  obj["top_by_lu"] = jsonl::ojson::array();
  for (const LuCount& lu : report.top_by_lu) {
    jsonl::ojson entry;
    entry["lu_id"] = lu.lu_id;
    entry["languages"] = lu.languages;
    entry["count"] = lu.count;
    obj["top_by_lu"].push_back(std::move(entry));
  }
  obj["frame_count_with_exemplars"] = report.frame_count_with_exemplars;
  return obj.dump(2);
}

}  // namespace framekit
