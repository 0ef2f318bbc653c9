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

#include "framekit/predictions.hpp"

#include <algorithm>
#include <fstream>

#include "framekit/error.hpp"
#include "jsonl_util.hpp"

namespace framekit {

using jsonl::ojson;

std::vector<PredictionRow> read_predictions(std::istream& in,
                                            const std::string& source_name) {
  std::vector<PredictionRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    ojson obj = jsonl::parse_line(line, source_name, line_no);

    PredictionRow row;
    Annotation& annotation = row.annotation;
    annotation.sentence_id =
        jsonl::require_string(obj, "sentence_id", source_name, line_no);
    const ojson& target = jsonl::require(obj, "target", source_name, line_no);
    annotation.target.start =
        jsonl::require_index(target, "start", source_name, line_no);
    annotation.target.end =
        jsonl::require_index(target, "end", source_name, line_no);
    annotation.frame_name =
        jsonl::require_string(obj, "frame", source_name, line_no);
    if (obj.contains("roles")) {
      const ojson& roles = obj["roles"];
      if (!roles.is_array()) {
        throw Error(ErrorKind::parse, jsonl::locus(source_name, line_no) +
                                          ": roles must be an array");
      }
      for (const ojson& role_obj : roles) {
        RoleFill fill;
        fill.role_name =
            jsonl::require_string(role_obj, "role", source_name, line_no);
        fill.span.start =
            jsonl::require_index(role_obj, "start", source_name, line_no);
        fill.span.end =
            jsonl::require_index(role_obj, "end", source_name, line_no);
        fill.confidence = jsonl::require_confidence(role_obj, "confidence",
                                                    source_name, line_no);
        annotation.role_fills.push_back(std::move(fill));
      }
    }
    annotation.frame_confidence =
        jsonl::require_confidence(obj, "frame_confidence", source_name,
                                  line_no);
    if (obj.contains("lu_id") && !obj["lu_id"].is_null()) {
      annotation.lu_id = obj["lu_id"].get<std::string>();
    }
    row.provenance = obj.contains("provenance")
                         ? obj["provenance"].get<std::string>()
                         : "external";
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<PredictionRow> load_predictions(const std::string& path) {
  std::ifstream in = jsonl::open_input(path);
  return read_predictions(in, path);
}

void write_predictions(const std::vector<PredictionRow>& rows,
                       std::ostream& out) {
  for (const PredictionRow& row : rows) {
    const Annotation& annotation = row.annotation;
    ojson obj;
    obj["sentence_id"] = annotation.sentence_id;
    obj["target"] = ojson::object();
    obj["target"]["start"] = annotation.target.start;
    obj["target"]["end"] = annotation.target.end;
    obj["frame"] = annotation.frame_name;
    ojson roles = ojson::array();
    for (const RoleFill& fill : annotation.role_fills) {
      ojson role_obj;
      role_obj["role"] = fill.role_name;
      role_obj["start"] = fill.span.start;
      role_obj["end"] = fill.span.end;
      role_obj["confidence"] = fill.confidence;
      roles.push_back(std::move(role_obj));
    }
    obj["roles"] = std::move(roles);
    obj["frame_confidence"] = annotation.frame_confidence;
    obj["provenance"] = row.provenance;
    if (annotation.lu_id.has_value()) {
      obj["lu_id"] = *annotation.lu_id;
    }
    out << obj.dump() << "\n";
  }
}

void save_predictions(const std::vector<PredictionRow>& rows,
                      const std::string& path) {
  std::ofstream out = jsonl::open_output(path);
  write_predictions(rows, out);
  if (!out) {
    throw Error(ErrorKind::io, "failed writing " + path);
  }
}

std::map<std::string, PredictionSet> group_by_sentence(
    const std::vector<PredictionRow>& rows) {
  std::map<std::string, PredictionSet> grouped;
  for (const PredictionRow& row : rows) {
    PredictionSet& set = grouped[row.annotation.sentence_id];
    set.annotations.push_back(row.annotation);
    if (set.provenance.empty()) set.provenance = row.provenance;
  }
  return grouped;
}

std::vector<std::string> provenances(const std::vector<PredictionRow>& rows) {
  std::vector<std::string> result;
  for (const PredictionRow& row : rows) {
    if (std::find(result.begin(), result.end(), row.provenance) ==
        result.end()) {
      result.push_back(row.provenance);
    }
  }
  return result;
}

}  // namespace framekit
