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

#include "framekit/validate.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "framekit/error.hpp"
#include "jsonl_util.hpp"

namespace framekit {

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::unknown_frame: return "unknown_frame";
    case ViolationKind::role_not_in_frame: return "role_not_in_frame";
    case ViolationKind::lu_frame_mismatch: return "lu_frame_mismatch";
    case ViolationKind::duplicate_core_role: return "duplicate_core_role";
    case ViolationKind::span_overflow: return "span_overflow";
  }
  return "unknown";
}

namespace {

bool span_in_bounds(const Span& span, std::size_t token_count) {
  return span.start < span.end && span.end <= token_count;
}

std::string span_text(const Span& span) {
  std::ostringstream out;
  out << "[" << span.start << "," << span.end << ")";
  return out.str();
}

}  // namespace

std::vector<Violation> validate(const Corpus& corpus,
                                const std::vector<Annotation>& annotations) {
  std::vector<Violation> violations;
  auto flag = [&](ViolationKind kind, const Annotation& annotation,
                  std::size_t index, const std::string& detail) {
    violations.push_back({kind, annotation.sentence_id, index, detail});
  };

  for (std::size_t i = 0; i < annotations.size(); ++i) {
    const Annotation& annotation = annotations[i];
    const Sentence* sentence = corpus.find_sentence(annotation.sentence_id);
    if (sentence == nullptr) {
      throw Error(ErrorKind::reference,
                  "validate: sentence_id \"" + annotation.sentence_id +
                      "\" does not reference an existing sentence");
    }
    const std::size_t token_count = sentence->tokens.size();

    if (!span_in_bounds(annotation.target, token_count)) {
      flag(ViolationKind::span_overflow, annotation, i,
           "target span " + span_text(annotation.target) +
               " out of bounds for " + std::to_string(token_count) +
               " tokens");
    }
    for (const RoleFill& fill : annotation.role_fills) {
      if (!span_in_bounds(fill.span, token_count)) {
        flag(ViolationKind::span_overflow, annotation, i,
             "role \"" + fill.role_name + "\" span " + span_text(fill.span) +
                 " out of bounds for " + std::to_string(token_count) +
                 " tokens");
      }
    }

    const FrameDef* frame = corpus.find_frame(annotation.frame_name);
    if (frame == nullptr) {
      flag(ViolationKind::unknown_frame, annotation, i,
           "frame \"" + annotation.frame_name + "\" is not defined");
    } else {
      // Role inventory check only makes sense for a known frame.
      for (const RoleFill& fill : annotation.role_fills) {
        bool known = std::find(frame->role_names.begin(),
                               frame->role_names.end(),
                               fill.role_name) != frame->role_names.end();
        if (!known) {
          flag(ViolationKind::role_not_in_frame, annotation, i,
               "role \"" + fill.role_name + "\" is not in frame \"" +
                   frame->name + "\"");
        }
      }
    }

    std::map<std::string, int> role_uses;
    for (const RoleFill& fill : annotation.role_fills) {
      ++role_uses[fill.role_name];
    }
    for (const auto& [role, uses] : role_uses) {
      if (uses > 1) {
        flag(ViolationKind::duplicate_core_role, annotation, i,
             "role \"" + role + "\" filled " + std::to_string(uses) +
                 " times");
      }
    }

    if (annotation.lu_id.has_value()) {
      auto lus = corpus.find_lus(*annotation.lu_id, sentence->language);
      if (lus.empty()) {
        flag(ViolationKind::lu_frame_mismatch, annotation, i,
             "lu \"" + *annotation.lu_id + "\" has no definition for language " +
                 sentence->language);
      } else {
        bool matches = std::any_of(lus.begin(), lus.end(),
                                   [&](const LexicalUnitDef* lu) {
                                     return lu->frame_name ==
                                            annotation.frame_name;
                                   });
        if (!matches) {
          flag(ViolationKind::lu_frame_mismatch, annotation, i,
               "lu \"" + *annotation.lu_id + "\" does not evoke frame \"" +
                   annotation.frame_name + "\"");
        }
      }
    }
  }

  return violations;
}

double consistency_rate(const std::vector<Violation>& violations,
                        std::size_t annotation_count) {
  if (annotation_count == 0) return 1.0;
  std::set<std::size_t> violated;
  for (const Violation& violation : violations) {
    violated.insert(violation.annotation_index);
  }
  return static_cast<double>(annotation_count - violated.size()) /
         static_cast<double>(annotation_count);
}

void write_violations(const std::vector<Violation>& violations,
                      std::ostream& out) {
  for (const Violation& violation : violations) {
    jsonl::ojson obj;
    obj["kind"] = to_string(violation.kind);
    obj["sentence_id"] = violation.sentence_id;
    obj["annotation_index"] = violation.annotation_index;
    obj["detail"] = violation.detail;
    out << obj.dump() << "\n";
  }
}

}  // namespace framekit
