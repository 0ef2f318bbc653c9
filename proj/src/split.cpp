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

#include "framekit/split.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "framekit/error.hpp"
#include "jsonl_util.hpp"

namespace framekit {

using jsonl::ojson;

std::string to_string(Partition p) {
  switch (p) {
    case Partition::train: return "train";
    case Partition::dev: return "dev";
    case Partition::test: return "test";
  }
  return "train";
}

Partition partition_from_string(const std::string& name) {
  if (name == "train") return Partition::train;
  if (name == "dev") return Partition::dev;
  if (name == "test") return Partition::test;
  throw Error(ErrorKind::usage, "unknown partition \"" + name + "\"");
}

void SplitRatios::check() const {
  for (double r : {train, dev, test}) {
    if (!(r > 0.0 && r < 1.0)) {
      throw Error(ErrorKind::usage,
                  "split ratios must each lie in (0,1)");
    }
  }
  if (std::fabs(train + dev + test - 1.0) > 1e-9) {
    throw Error(ErrorKind::usage, "split ratios must sum to 1");
  }
}

std::array<std::size_t, 3> apportion(const SplitRatios& ratios,
                                     std::size_t n) {
  ratios.check();
  const double quotas[3] = {ratios.train * static_cast<double>(n),
                            ratios.dev * static_cast<double>(n),
                            ratios.test * static_cast<double>(n)};
  std::array<std::size_t, 3> sizes{};
  double remainders[3];
  std::size_t assigned = 0;
  for (int i = 0; i < 3; ++i) {
    sizes[i] = static_cast<std::size_t>(std::floor(quotas[i]));
    remainders[i] = quotas[i] - std::floor(quotas[i]);
    assigned += sizes[i];
  }
  // Remainder seats by descending fractional part, ties train > test > dev.
  const int tie_order[3] = {0, 2, 1};
  std::array<int, 3> order = {0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (remainders[a] != remainders[b]) return remainders[a] > remainders[b];
    int rank_a = static_cast<int>(std::find(tie_order, tie_order + 3, a) -
                                  tie_order);
    int rank_b = static_cast<int>(std::find(tie_order, tie_order + 3, b) -
                                  tie_order);
    return rank_a < rank_b;
  });
  for (std::size_t seat = 0; assigned < n; ++seat) {
    ++sizes[order[seat % 3]];
    ++assigned;
  }
  return sizes;
}

SplitAssignment split_corpus(const Corpus& corpus, const SplitRatios& ratios,
                             std::uint64_t seed) {
  ratios.check();
  if (corpus.sentences.size() < 3) {
    throw Error(ErrorKind::data,
                "cannot split a corpus with fewer than 3 sentences");
  }

  std::vector<std::string> ids;
  ids.reserve(corpus.sentences.size());
  for (const Sentence& sentence : corpus.sentences) {
    ids.push_back(sentence.id);
  }
  std::sort(ids.begin(), ids.end());

  // Fisher-Yates over mt19937_64 with modulo draws; both are bit-exact
  // across platforms, which std::shuffle and uniform_int_distribution
  // are not.
  std::mt19937_64 rng(seed);
  for (std::size_t i = ids.size() - 1; i > 0; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
    std::swap(ids[i], ids[j]);
  }

  const auto sizes = apportion(ratios, ids.size());
  SplitAssignment assignment;
  assignment.seed = seed;
  assignment.ratios = ratios;
  std::size_t cursor = 0;
  const Partition blocks[3] = {Partition::train, Partition::dev,
                               Partition::test};
  for (int b = 0; b < 3; ++b) {
    for (std::size_t k = 0; k < sizes[static_cast<std::size_t>(b)]; ++k) {
      assignment.partition_of.emplace(ids[cursor++], blocks[b]);
    }
  }
  return assignment;
}

Corpus project(const Corpus& corpus, const SplitAssignment& assignment,
               Partition partition) {
  for (const Sentence& sentence : corpus.sentences) {
    if (assignment.partition_of.find(sentence.id) ==
        assignment.partition_of.end()) {
      throw Error(ErrorKind::reference,
                  "split assignment does not cover sentence \"" +
                      sentence.id + "\"");
    }
  }

  Corpus result;
  result.scenes = corpus.scenes;
  result.frames = corpus.frames;
  result.lexical_units = corpus.lexical_units;
  result.kind = corpus.kind;
  for (const Sentence& sentence : corpus.sentences) {
    if (assignment.partition_of.at(sentence.id) == partition) {
      result.sentences.push_back(sentence);
    }
  }
  for (const Annotation& annotation : corpus.annotations) {
    auto it = assignment.partition_of.find(annotation.sentence_id);
    if (it == assignment.partition_of.end()) {
      throw Error(ErrorKind::reference,
                  "split assignment does not cover sentence \"" +
                      annotation.sentence_id + "\"");
    }
    if (it->second == partition) {
      result.annotations.push_back(annotation);
    }
  }
  result.finalize();
  return result;
}

void write_split(const SplitAssignment& assignment, std::ostream& out) {
  ojson header;
  header["seed"] = assignment.seed;
  header["ratios"] = ojson::object();
  header["ratios"]["train"] = assignment.ratios.train;
  header["ratios"]["dev"] = assignment.ratios.dev;
  header["ratios"]["test"] = assignment.ratios.test;
  out << header.dump() << "\n";
  for (const auto& [sentence_id, partition] : assignment.partition_of) {
    ojson row;
    row["sentence_id"] = sentence_id;
    row["partition"] = to_string(partition);
    out << row.dump() << "\n";
  }
}

void save_split(const SplitAssignment& assignment, const std::string& path) {
  std::ofstream out = jsonl::open_output(path);
  write_split(assignment, out);
  if (!out) {
    throw Error(ErrorKind::io, "failed writing " + path);
  }
}

SplitAssignment read_split(std::istream& in, const std::string& source_name) {
  SplitAssignment assignment;
  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    ojson obj = jsonl::parse_line(line, source_name, line_no);
    if (!saw_header) {
      if (!obj.contains("seed") || !obj.contains("ratios")) {
        throw Error(ErrorKind::parse,
                    jsonl::locus(source_name, line_no) +
                        ": split file must start with a header line "
                        "carrying seed and ratios");
      }
      assignment.seed = obj["seed"].get<std::uint64_t>();
      const ojson& ratios = obj["ratios"];
      assignment.ratios.train = ratios.at("train").get<double>();
      assignment.ratios.dev = ratios.at("dev").get<double>();
      assignment.ratios.test = ratios.at("test").get<double>();
      saw_header = true;
      continue;
    }
    std::string sentence_id =
        jsonl::require_string(obj, "sentence_id", source_name, line_no);
    Partition partition = partition_from_string(
        jsonl::require_string(obj, "partition", source_name, line_no));
    if (!assignment.partition_of.emplace(sentence_id, partition).second) {
      throw Error(ErrorKind::data, jsonl::locus(source_name, line_no) +
                                       ": sentence \"" + sentence_id +
                                       "\" assigned twice");
    }
  }
  if (!saw_header) {
    throw Error(ErrorKind::parse, source_name + ": empty split file");
  }
  return assignment;
}

SplitAssignment load_split(const std::string& path) {
  std::ifstream in = jsonl::open_input(path);
  return read_split(in, path);
}

}  // namespace framekit
