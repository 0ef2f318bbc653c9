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
// Deterministic train/dev/test partitioning at the unique-sentence level.
// Sentence ids are sorted lexicographically, shuffled by Fisher-Yates over
// std::mt19937_64 (index draws via modulo, never uniform_int_distribution,
// which is implementation-defined), and cut into blocks sized by
// largest-remainder apportionment with remainder ties going train > test >
// dev. Same (corpus, ratios, seed) always yields an identical assignment.

#ifndef FRAMEKIT_SPLIT_HPP_
#define FRAMEKIT_SPLIT_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include "framekit/corpus.hpp"

namespace framekit {

enum class Partition { train, dev, test };

std::string to_string(Partition p);
Partition partition_from_string(const std::string& name);

struct SplitRatios {
  double train = 0.85;
  double dev = 0.05;
  double test = 0.10;

  // Each ratio in (0,1), sum == 1 within 1e-9. Throws Error otherwise.
  void check() const;
};

struct SplitAssignment {
  std::map<std::string, Partition> partition_of;  // every corpus sentence id
  std::uint64_t seed = 0;
  SplitRatios ratios;
};

// Largest-remainder apportionment of ratios over n (train, dev, test).
std::array<std::size_t, 3> apportion(const SplitRatios& ratios, std::size_t n);

// Requires at least 3 sentences. No stratification by frame or LU.
SplitAssignment split_corpus(const Corpus& corpus, const SplitRatios& ratios,
                             std::uint64_t seed);

// Sub-corpus with exactly the partition's sentences, their annotations, and
// the full ontology. Throws Error if assignment and corpus disagree.
Corpus project(const Corpus& corpus, const SplitAssignment& assignment,
               Partition partition);

void save_split(const SplitAssignment& assignment, const std::string& path);
void write_split(const SplitAssignment& assignment, std::ostream& out);
SplitAssignment load_split(const std::string& path);
SplitAssignment read_split(std::istream& in,
                           const std::string& source_name = "<stream>");

}  // namespace framekit

#endif  // FRAMEKIT_SPLIT_HPP_
