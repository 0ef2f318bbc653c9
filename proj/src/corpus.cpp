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

#include "framekit/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "framekit/error.hpp"
#include "framekit/validate.hpp"
#include "jsonl_util.hpp"

namespace framekit {

using jsonl::ojson;

namespace {

bool valid_language_code(const std::string& code) {
  if (code.size() < 2 || code.size() > 3) return false;
  return std::all_of(code.begin(), code.end(),
                     [](unsigned char c) { return c >= 'a' && c <= 'z'; });
}

bool valid_lu_id(const std::string& id) {
  static const std::set<std::string> kPos = {"v", "n", "a", "adv", "idiom"};
  auto dot = id.rfind('.');
  if (dot == std::string::npos || dot == 0) return false;
  return kPos.count(id.substr(dot + 1)) > 0;
}

void check_span(const Span& span, std::size_t token_count,
                const std::string& what, const std::string& sentence_id) {
  if (span.start >= span.end || span.end > token_count) {
    std::ostringstream msg;
    msg << "sentence \"" << sentence_id << "\": " << what << " span ["
        << span.start << "," << span.end << ") out of bounds (sentence has "
        << token_count << " tokens)";
    throw Error(ErrorKind::span, msg.str());
  }
}

void check_confidence(double value, const std::string& what,
                      const std::string& sentence_id) {
  if (value < 0.0 || value > 1.0) {
    throw Error(ErrorKind::data, "sentence \"" + sentence_id + "\": " + what +
                                     " confidence outside [0,1]");
  }
}

Span parse_span(const ojson& obj, const std::string& source,
                std::size_t line_no) {
  Span span;
  span.start = jsonl::require_index(obj, "start", source, line_no);
  span.end = jsonl::require_index(obj, "end", source, line_no);
  return span;
}

ojson span_to_json(const Span& span) {
  ojson obj;
  obj["start"] = span.start;
  obj["end"] = span.end;
  return obj;
}

}  // namespace

std::string to_string(CorpusKind kind) {
  return kind == CorpusKind::exemplar ? "exemplar" : "fulltext";
}

const Sentence* Corpus::find_sentence(const std::string& id) const {
  auto it = sentence_index_.find(id);
  return it == sentence_index_.end() ? nullptr : &sentences[it->second];
}

const FrameDef* Corpus::find_frame(const std::string& name) const {
  auto it = frame_index_.find(name);
  return it == frame_index_.end() ? nullptr : &frames[it->second];
}

const Scene* Corpus::find_scene(const std::string& name) const {
  auto it = scene_index_.find(name);
  return it == scene_index_.end() ? nullptr : &scenes[it->second];
}

std::vector<const LexicalUnitDef*> Corpus::find_lus(
    const std::string& id, const std::string& language) const {
  std::vector<const LexicalUnitDef*> result;
  auto range = lu_index_.equal_range({id, language});
  for (auto it = range.first; it != range.second; ++it) {
    result.push_back(&lexical_units[it->second]);
  }
  return result;
}

void Corpus::finalize() {
  scene_index_.clear();
  frame_index_.clear();
  lu_index_.clear();
  sentence_index_.clear();

  for (std::size_t i = 0; i < scenes.size(); ++i) {
    const Scene& scene = scenes[i];
    if (scene.name.empty()) {
      throw Error(ErrorKind::data, "scene with empty name");
    }
    if (scene.frame_names.empty()) {
      throw Error(ErrorKind::data,
                  "scene \"" + scene.name + "\" lists no frames");
    }
    std::set<std::string> seen(scene.frame_names.begin(),
                               scene.frame_names.end());
    if (seen.size() != scene.frame_names.size()) {
      throw Error(ErrorKind::data,
                  "scene \"" + scene.name + "\" has duplicate frame names");
    }
    if (!scene_index_.emplace(scene.name, i).second) {
      throw Error(ErrorKind::data, "duplicate scene \"" + scene.name + "\"");
    }
  }

  for (std::size_t i = 0; i < frames.size(); ++i) {
    const FrameDef& frame = frames[i];
    if (frame.name.empty()) {
      throw Error(ErrorKind::data, "frame with empty name");
    }
    if (frame.role_names.empty()) {
      throw Error(ErrorKind::data,
                  "frame \"" + frame.name + "\" has no roles");
    }
    std::set<std::string> seen(frame.role_names.begin(),
                               frame.role_names.end());
    if (seen.size() != frame.role_names.size()) {
      throw Error(ErrorKind::data,
                  "frame \"" + frame.name + "\" has duplicate role names");
    }
    if (!frame_index_.emplace(frame.name, i).second) {
      throw Error(ErrorKind::data, "duplicate frame \"" + frame.name + "\"");
    }
  }

  // Cross-references between ontology layers.
  for (const FrameDef& frame : frames) {
    if (scene_index_.find(frame.scene_name) == scene_index_.end()) {
      throw Error(ErrorKind::reference,
                  "frame \"" + frame.name + "\": scene \"" + frame.scene_name +
                      "\" does not reference an existing scene");
    }
  }
  for (const Scene& scene : scenes) {
    for (const std::string& frame_name : scene.frame_names) {
      if (frame_index_.find(frame_name) == frame_index_.end()) {
        throw Error(ErrorKind::reference,
                    "scene \"" + scene.name + "\": frame \"" + frame_name +
                        "\" does not reference an existing frame");
      }
    }
  }

  for (std::size_t i = 0; i < lexical_units.size(); ++i) {
    const LexicalUnitDef& lu = lexical_units[i];
    if (!valid_lu_id(lu.id)) {
      throw Error(ErrorKind::data,
                  "lexical unit \"" + lu.id +
                      "\": id must be <lemma>.<pos> with pos in "
                      "{v, n, a, adv, idiom}");
    }
    if (!valid_language_code(lu.language)) {
      throw Error(ErrorKind::data, "lexical unit \"" + lu.id +
                                       "\": bad language code \"" +
                                       lu.language + "\"");
    }
    if (frame_index_.find(lu.frame_name) == frame_index_.end()) {
      throw Error(ErrorKind::reference,
                  "lexical unit \"" + lu.id + "\": frame \"" + lu.frame_name +
                      "\" does not reference an existing frame");
    }
    auto key = std::make_pair(lu.id, lu.language);
    auto range = lu_index_.equal_range(key);
    for (auto it = range.first; it != range.second; ++it) {
      if (lexical_units[it->second].frame_name == lu.frame_name) {
        throw Error(ErrorKind::data, "duplicate lexical unit (\"" + lu.id +
                                         "\", " + lu.language + ")");
      }
    }
    lu_index_.emplace(key, i);
  }

  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const Sentence& sentence = sentences[i];
    if (sentence.id.empty()) {
      throw Error(ErrorKind::data, "sentence with empty id");
    }
    if (!valid_language_code(sentence.language)) {
      throw Error(ErrorKind::data, "sentence \"" + sentence.id +
                                       "\": bad language code \"" +
                                       sentence.language + "\"");
    }
    if (sentence.tokens.empty()) {
      throw Error(ErrorKind::data,
                  "sentence \"" + sentence.id + "\" has no tokens");
    }
    for (const std::string& token : sentence.tokens) {
      if (token.empty()) {
        throw Error(ErrorKind::data,
                    "sentence \"" + sentence.id + "\" has an empty token");
      }
    }
    if (!sentence_index_.emplace(sentence.id, i).second) {
      throw Error(ErrorKind::data,
                  "duplicate sentence \"" + sentence.id + "\"");
    }
  }

  std::set<std::string> annotated;
  for (const Annotation& annotation : annotations) {
    const Sentence* sentence = find_sentence(annotation.sentence_id);
    if (sentence == nullptr) {
      throw Error(ErrorKind::reference,
                  "annotation: sentence_id \"" + annotation.sentence_id +
                      "\" does not reference an existing sentence");
    }
    check_span(annotation.target, sentence->tokens.size(), "target",
               sentence->id);
    check_confidence(annotation.frame_confidence, "frame", sentence->id);
    for (const RoleFill& fill : annotation.role_fills) {
      check_span(fill.span, sentence->tokens.size(),
                 "role \"" + fill.role_name + "\"", sentence->id);
      check_confidence(fill.confidence, "role \"" + fill.role_name + "\"",
                       sentence->id);
    }
    annotated.insert(annotation.sentence_id);
  }

  if (kind == CorpusKind::exemplar) {
    for (const Sentence& sentence : sentences) {
      if (annotated.find(sentence.id) == annotated.end()) {
        throw Error(ErrorKind::data,
                    "exemplar corpus: sentence \"" + sentence.id +
                        "\" has no annotation");
      }
    }
  }
}

Corpus read_corpus(std::istream& in, const std::string& source_name) {
  Corpus corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    ojson obj = jsonl::parse_line(line, source_name, line_no);
    std::string type = jsonl::require_string(obj, "type", source_name, line_no);

    if (type == "scene") {
      Scene scene;
      scene.name = jsonl::require_string(obj, "name", source_name, line_no);
      const ojson& names =
          jsonl::require(obj, "frame_names", source_name, line_no);
      if (!names.is_array()) {
        throw Error(ErrorKind::parse, jsonl::locus(source_name, line_no) +
                                          ": frame_names must be an array");
      }
      for (const ojson& name : names) {
        scene.frame_names.push_back(name.get<std::string>());
      }
      corpus.scenes.push_back(std::move(scene));
    } else if (type == "frame") {
      FrameDef frame;
      frame.name = jsonl::require_string(obj, "name", source_name, line_no);
      frame.scene_name =
          jsonl::require_string(obj, "scene_name", source_name, line_no);
      const ojson& roles =
          jsonl::require(obj, "role_names", source_name, line_no);
      if (!roles.is_array()) {
        throw Error(ErrorKind::parse, jsonl::locus(source_name, line_no) +
                                          ": role_names must be an array");
      }
      for (const ojson& role : roles) {
        frame.role_names.push_back(role.get<std::string>());
      }
      corpus.frames.push_back(std::move(frame));
    } else if (type == "lu") {
      LexicalUnitDef lu;
      lu.id = jsonl::require_string(obj, "id", source_name, line_no);
      lu.language =
          jsonl::require_string(obj, "language", source_name, line_no);
      lu.frame_name =
          jsonl::require_string(obj, "frame_name", source_name, line_no);
      corpus.lexical_units.push_back(std::move(lu));
    } else if (type == "sentence") {
      Sentence sentence;
      sentence.id = jsonl::require_string(obj, "id", source_name, line_no);
      sentence.language =
          jsonl::require_string(obj, "language", source_name, line_no);
      const ojson& tokens =
          jsonl::require(obj, "tokens", source_name, line_no);
      if (!tokens.is_array()) {
        throw Error(ErrorKind::parse, jsonl::locus(source_name, line_no) +
                                          ": tokens must be an array");
      }
      for (const ojson& token : tokens) {
        sentence.tokens.push_back(token.get<std::string>());
      }
      sentence.text = jsonl::require_string(obj, "text", source_name, line_no);
      corpus.sentences.push_back(std::move(sentence));
    } else if (type == "annotation") {
      Annotation annotation;
      annotation.sentence_id =
          jsonl::require_string(obj, "sentence_id", source_name, line_no);
      annotation.target = parse_span(
          jsonl::require(obj, "target", source_name, line_no), source_name,
          line_no);
      if (obj.contains("lu_id") && !obj["lu_id"].is_null()) {
        annotation.lu_id = obj["lu_id"].get<std::string>();
      }
      annotation.frame_name =
          jsonl::require_string(obj, "frame_name", source_name, line_no);
      if (obj.contains("role_fills")) {
        const ojson& fills = obj["role_fills"];
        if (!fills.is_array()) {
          throw Error(ErrorKind::parse, jsonl::locus(source_name, line_no) +
                                            ": role_fills must be an array");
        }
        for (const ojson& fill_obj : fills) {
          RoleFill fill;
          fill.role_name = jsonl::require_string(fill_obj, "role_name",
                                                 source_name, line_no);
          fill.span =
              parse_span(jsonl::require(fill_obj, "span", source_name, line_no),
                         source_name, line_no);
          fill.confidence = jsonl::require_confidence(fill_obj, "confidence",
                                                      source_name, line_no);
          annotation.role_fills.push_back(std::move(fill));
        }
      }
      annotation.frame_confidence = jsonl::require_confidence(
          obj, "frame_confidence", source_name, line_no);
      corpus.annotations.push_back(std::move(annotation));
    } else {
      throw Error(ErrorKind::parse, jsonl::locus(source_name, line_no) +
                                        ": unknown line type \"" + type +
                                        "\"");
    }
  }

  corpus.finalize();
  corpus.loader_flags = validate(corpus, corpus.annotations);
  return corpus;
}

Corpus load_corpus(const std::string& path) {
  std::ifstream in = jsonl::open_input(path);
  return read_corpus(in, path);
}

void write_corpus(const Corpus& corpus, std::ostream& out) {
  for (const Scene& scene : corpus.scenes) {
    ojson obj;
    obj["type"] = "scene";
    obj["name"] = scene.name;
    obj["frame_names"] = scene.frame_names;
    out << obj.dump() << "\n";
  }
  for (const FrameDef& frame : corpus.frames) {
    ojson obj;
    obj["type"] = "frame";
    obj["name"] = frame.name;
    obj["scene_name"] = frame.scene_name;
    obj["role_names"] = frame.role_names;
    out << obj.dump() << "\n";
  }
  for (const LexicalUnitDef& lu : corpus.lexical_units) {
    ojson obj;
    obj["type"] = "lu";
    obj["id"] = lu.id;
    obj["language"] = lu.language;
    obj["frame_name"] = lu.frame_name;
    out << obj.dump() << "\n";
  }
  for (const Sentence& sentence : corpus.sentences) {
    ojson obj;
    obj["type"] = "sentence";
    obj["id"] = sentence.id;
    obj["language"] = sentence.language;
    obj["tokens"] = sentence.tokens;
    obj["text"] = sentence.text;
    out << obj.dump() << "\n";
  }
  for (const Annotation& annotation : corpus.annotations) {
    ojson obj;
    obj["type"] = "annotation";
    obj["sentence_id"] = annotation.sentence_id;
    obj["target"] = span_to_json(annotation.target);
    if (annotation.lu_id.has_value()) {
      obj["lu_id"] = *annotation.lu_id;
    }
    obj["frame_name"] = annotation.frame_name;
    ojson fills = ojson::array();
    for (const RoleFill& fill : annotation.role_fills) {
      ojson fill_obj;
      fill_obj["role_name"] = fill.role_name;
      fill_obj["span"] = span_to_json(fill.span);
      fill_obj["confidence"] = fill.confidence;
      fills.push_back(std::move(fill_obj));
    }
    obj["role_fills"] = std::move(fills);
    obj["frame_confidence"] = annotation.frame_confidence;
    out << obj.dump() << "\n";
  }
}

void save_corpus(const Corpus& corpus, const std::string& path) {
  std::ofstream out = jsonl::open_output(path);
  write_corpus(corpus, out);
  if (!out) {
    throw Error(ErrorKind::io, "failed writing " + path);
  }
}

}  // namespace framekit
