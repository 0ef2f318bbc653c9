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

#ifndef FRAMEKIT_VIOLATION_HPP_
#define FRAMEKIT_VIOLATION_HPP_

#include <cstddef>
#include <string>

namespace framekit {

enum class ViolationKind {
  unknown_frame,
  role_not_in_frame,
  lu_frame_mismatch,
  duplicate_core_role,
  span_overflow,
};

std::string to_string(ViolationKind kind);

// One ontology-consistency breach, located by sentence and annotation index.
struct Violation {
  ViolationKind kind;
  std::string sentence_id;
  std::size_t annotation_index;
  std::string detail;
};

}  // namespace framekit

#endif  // FRAMEKIT_VIOLATION_HPP_
