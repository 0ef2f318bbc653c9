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
// Internal helpers for line-oriented JSON parsing with located errors.

#ifndef FRAMEKIT_SRC_JSONL_UTIL_HPP_
#define FRAMEKIT_SRC_JSONL_UTIL_HPP_

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "framekit/error.hpp"

namespace framekit {
namespace jsonl {

using ojson = nlohmann::ordered_json;

inline std::string locus(const std::string& source, std::size_t line_no) {
  return source + ":" + std::to_string(line_no);
}

inline ojson parse_line(const std::string& line, const std::string& source,
                        std::size_t line_no) {
  ojson value = ojson::parse(line, nullptr, /*allow_exceptions=*/false);
  if (value.is_discarded() || !value.is_object()) {
    throw Error(ErrorKind::parse,
                locus(source, line_no) + ": malformed JSONL line");
  }
  return value;
}

inline const ojson& require(const ojson& obj, const char* key,
                            const std::string& source, std::size_t line_no) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw Error(ErrorKind::parse, locus(source, line_no) +
                                      ": missing field \"" + key + "\"");
  }
  return *it;
}

inline std::string require_string(const ojson& obj, const char* key,
                                  const std::string& source,
                                  std::size_t line_no) {
  const ojson& v = require(obj, key, source, line_no);
  if (!v.is_string()) {
    throw Error(ErrorKind::parse, locus(source, line_no) + ": field \"" +
                                      key + "\" must be a string");
  }
  return v.get<std::string>();
}

inline std::size_t require_index(const ojson& obj, const char* key,
                                 const std::string& source,
                                 std::size_t line_no) {
  const ojson& v = require(obj, key, source, line_no);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw Error(ErrorKind::parse,
                locus(source, line_no) + ": field \"" + key +
                    "\" must be a non-negative integer");
  }
  return static_cast<std::size_t>(v.get<std::int64_t>());
}

inline double require_confidence(const ojson& obj, const char* key,
                                 const std::string& source,
                                 std::size_t line_no) {
  auto it = obj.find(key);
  if (it == obj.end()) return 1.0;
  if (!it->is_number()) {
    throw Error(ErrorKind::parse, locus(source, line_no) + ": field \"" +
                                      key + "\" must be a number");
  }
  double value = it->get<double>();
  if (value < 0.0 || value > 1.0) {
    throw Error(ErrorKind::data, locus(source, line_no) + ": field \"" +
                                     key + "\" outside [0,1]");
  }
  return value;
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::io, "cannot open " + path + " for reading");
  }
  return in;
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorKind::io, "cannot open " + path + " for writing");
  }
  return out;
}

}  // namespace jsonl
}  // namespace framekit

#endif  // FRAMEKIT_SRC_JSONL_UTIL_HPP_
