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

#ifndef FRAMEKIT_LOG_HPP_
#define FRAMEKIT_LOG_HPP_

#include <cstdlib>
#include <iostream>
#include <string>

namespace framekit {
namespace log {

enum class Level { debug = 0, info = 1, warn = 2, error = 3 };

// Level comes from FRAMEKIT_LOG (debug|info|warn|error), default info.
inline Level threshold() {
  static Level level = [] {
    const char* env = std::getenv("FRAMEKIT_LOG");
    if (env == nullptr) return Level::info;
    std::string v(env);
    if (v == "debug") return Level::debug;
    if (v == "warn") return Level::warn;
    if (v == "error") return Level::error;
    return Level::info;
  }();
  return level;
}

inline void emit(Level level, const char* tag, const std::string& message) {
  if (level < threshold()) return;
  std::cerr << "[framekit] " << tag << ": " << message << "\n";
}

inline void debug(const std::string& m) { emit(Level::debug, "debug", m); }
inline void info(const std::string& m) { emit(Level::info, "info", m); }
inline void warn(const std::string& m) { emit(Level::warn, "warn", m); }
inline void error(const std::string& m) { emit(Level::error, "error", m); }

}  // namespace log
}  // namespace framekit

#endif  // FRAMEKIT_LOG_HPP_
