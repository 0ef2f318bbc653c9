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

#ifndef FRAMEKIT_ERROR_HPP_
#define FRAMEKIT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace framekit {

// Error categories map onto CLI exit codes: usage -> 1, everything else -> 2.
enum class ErrorKind {
  usage,      // bad flags or arguments
  parse,      // malformed input file (message carries the line number)
  reference,  // dangling cross-reference (message names the missing entity)
  span,       // span out of bounds for its sentence
  io,         // file system failure
  version,    // model file version mismatch
  data,       // any other contract breach in input data
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace framekit

#endif  // FRAMEKIT_ERROR_HPP_
