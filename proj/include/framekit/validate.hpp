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

#ifndef FRAMEKIT_VALIDATE_HPP_
#define FRAMEKIT_VALIDATE_HPP_

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "framekit/corpus.hpp"
#include "framekit/violation.hpp"

namespace framekit {

// Checks annotations (gold or predicted) against the ontology carried by
// `corpus` (scenes, frames, LUs) and its sentences. Emits one Violation per
// breached rule:
//   unknown_frame        frame_name is not a defined frame
//   role_not_in_frame    a role fill names a role outside the frame's set
//   lu_frame_mismatch    lu_id has no definition row for (id, sentence
//                        language) whose frame matches the annotation
//   duplicate_core_role  the same role filled more than once in one
//                        annotation (warning-level; some frames may allow it)
//   span_overflow        target or role span out of bounds for the sentence
// Never throws on content; only an unresolvable sentence_id raises Error.
std::vector<Violation> validate(const Corpus& corpus,
                                const std::vector<Annotation>& annotations);

// Fraction of annotations with zero violations; 1.0 for an empty list.
double consistency_rate(const std::vector<Violation>& violations,
                        std::size_t annotation_count);

void write_violations(const std::vector<Violation>& violations,
                      std::ostream& out);

}  // namespace framekit

#endif  // FRAMEKIT_VALIDATE_HPP_
