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
// Data model for framenet-style exemplar corpora: an ontology of scenes,
// frames and lexical units, plus sentences and their gold annotations.
// The JSONL interchange format is documented in docs/formats.md.

#ifndef FRAMEKIT_CORPUS_HPP_
#define FRAMEKIT_CORPUS_HPP_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "framekit/violation.hpp"

namespace framekit {

// Half-open token-index interval [start, end).
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - start; }
  bool overlaps(const Span& other) const {
    return start < other.end && other.start < end;
  }
  bool operator==(const Span& other) const = default;
};

// A grouping of related frames (e.g. everything around shooting at goal).
struct Scene {
  std::string name;
  std::vector<std::string> frame_names;  // ordered, no duplicates
};

struct FrameDef {
  std::string name;        // unique corpus-wide
  std::string scene_name;  // must reference an existing Scene
  std::vector<std::string> role_names;
};

// A wordform-sense pairing that functions as a predicate. The id has the
// shape "<lemma>.<pos>" with pos one of v, n, a, adv, idiom. The same id may
// appear for several languages ("corner.n" exists for both en and fr).
struct LexicalUnitDef {
  std::string id;
  std::string language;  // ISO 639-1, lowercase
  std::string frame_name;
};

struct Sentence {
  std::string id;  // unique corpus-wide
  std::string language;
  std::vector<std::string> tokens;  // frozen upstream; never re-tokenized
  std::string text;
};

struct RoleFill {
  std::string role_name;
  Span span;
  double confidence = 1.0;
};

// One predicate instance: the target span that evokes a frame, plus the
// frame's realized roles. Gold data carries confidence 1.0 everywhere;
// imported predictions carry whatever the producing model emitted.
struct Annotation {
  std::string sentence_id;
  Span target;
  std::optional<std::string> lu_id;
  std::string frame_name;
  std::vector<RoleFill> role_fills;
  double frame_confidence = 1.0;
};

enum class CorpusKind { exemplar, fulltext };

struct Corpus {
  std::vector<Scene> scenes;
  std::vector<FrameDef> frames;
  std::vector<LexicalUnitDef> lexical_units;
  std::vector<Sentence> sentences;
  std::vector<Annotation> annotations;
  CorpusKind kind = CorpusKind::exemplar;

  // Ontology violations found in annotations at load time. The loader keeps
  // the offending annotations; the validator module is the enforcement point.
  std::vector<Violation> loader_flags;

  const Sentence* find_sentence(const std::string& id) const;
  const FrameDef* find_frame(const std::string& name) const;
  const Scene* find_scene(const std::string& name) const;
  // All LU definition rows with this id and language.
  std::vector<const LexicalUnitDef*> find_lus(const std::string& id,
                                              const std::string& language) const;

  // Rebuilds lookup indices and checks the structural invariants that loading
  // enforces (unique ids, resolvable cross-references, spans in bounds, every
  // sentence of an exemplar corpus annotated). Throws Error on breach.
  // Must be called after building a Corpus by hand; load_corpus calls it.
  void finalize();

 private:
  std::map<std::string, std::size_t> sentence_index_;
  std::map<std::string, std::size_t> frame_index_;
  std::map<std::string, std::size_t> scene_index_;
  std::multimap<std::pair<std::string, std::string>, std::size_t> lu_index_;
};

// Reads the JSONL corpus format (one object per line, "type" field one of
// scene, frame, lu, sentence, annotation). Ontology violations in annotations
// are retained and flagged in loader_flags, not dropped; structural breaches
// (parse errors, dangling references, bad spans) throw Error.
Corpus load_corpus(const std::string& path);
Corpus read_corpus(std::istream& in, const std::string& source_name = "<stream>");

// Writes the canonical JSONL form. save -> load -> save is byte-identical.
void save_corpus(const Corpus& corpus, const std::string& path);
void write_corpus(const Corpus& corpus, std::ostream& out);

std::string to_string(CorpusKind kind);

}  // namespace framekit

#endif  // FRAMEKIT_CORPUS_HPP_
