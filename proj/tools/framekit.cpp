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
// framekit command line: ingest / stats / split / train / predict / score /
// validate. Exit codes: 0 success, 1 usage error, 2 data error, 3 validation
// failure.

#include <cmath>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "framekit/corpus.hpp"
#include "framekit/error.hpp"
#include "framekit/evaluate.hpp"
#include "framekit/log.hpp"
#include "framekit/parser.hpp"
#include "framekit/predictions.hpp"
#include "framekit/split.hpp"
#include "framekit/stats.hpp"
#include "framekit/validate.hpp"

namespace {

using framekit::Error;
using framekit::ErrorKind;
using ojson = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitValidation = 3;

std::string fixed4(double value) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4) << value;
  return out.str();
}

double round4(double value) { return std::round(value * 10000.0) / 10000.0; }

framekit::SplitRatios parse_ratios(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, ',')) {
    try {
      values.push_back(std::stod(part));
    } catch (const std::exception&) {
      throw Error(ErrorKind::usage, "bad ratio value \"" + part + "\"");
    }
  }
  if (values.size() != 3) {
    throw Error(ErrorKind::usage,
                "--ratios needs three comma-separated values, e.g. "
                "0.85,0.05,0.10");
  }
  framekit::SplitRatios ratios{values[0], values[1], values[2]};
  ratios.check();
  return ratios;
}

std::vector<framekit::ScoreMode> parse_modes(const std::string& mode) {
  if (mode == "raw") return {framekit::ScoreMode::raw};
  if (mode == "gold-pred") return {framekit::ScoreMode::gold_pred};
  if (mode == "both") {
    return {framekit::ScoreMode::raw, framekit::ScoreMode::gold_pred};
  }
  throw Error(ErrorKind::usage,
              "--mode must be raw, gold-pred, or both (got \"" + mode + "\")");
}

int cmd_ingest(const std::string& in_path, const std::string& out_path) {
  framekit::Corpus corpus = framekit::load_corpus(in_path);
  framekit::save_corpus(corpus, out_path);
  std::cout << corpus.annotations.size() << " annotations / "
            << corpus.sentences.size() << " sentences\n";
  std::map<std::string, int> by_kind;
  for (const framekit::Violation& violation : corpus.loader_flags) {
    ++by_kind[to_string(violation.kind)];
  }
  std::cout << "loader flags: " << corpus.loader_flags.size();
  if (!by_kind.empty()) {
    std::cout << " (";
    bool first = true;
    for (const auto& [kind, count] : by_kind) {
      if (!first) std::cout << ", ";
      std::cout << kind << ": " << count;
      first = false;
    }
    std::cout << ")";
  }
  std::cout << "\n";
  return kExitOk;
}

int cmd_stats(const std::string& corpus_path, int top_k, bool merge_lu,
              const std::string& json_out) {
  framekit::Corpus corpus = framekit::load_corpus(corpus_path);
  framekit::StatsReport report =
      framekit::corpus_stats(corpus, top_k, merge_lu);
  std::cout << framekit::render_stats_table(report);
  std::string json = framekit::stats_to_json(report);
  if (json_out.empty()) {
    std::cout << "\n" << json << "\n";
  } else {
    std::ofstream out(json_out, std::ios::binary);
    if (!out) throw Error(ErrorKind::io, "cannot open " + json_out);
    out << json << "\n";
  }
  return kExitOk;
}

int cmd_split(const std::string& corpus_path, const std::string& ratios_text,
              std::uint64_t seed, const std::string& out_path) {
  framekit::SplitRatios ratios = parse_ratios(ratios_text);
  framekit::Corpus corpus = framekit::load_corpus(corpus_path);
  framekit::SplitAssignment assignment =
      framekit::split_corpus(corpus, ratios, seed);
  framekit::save_split(assignment, out_path);
  std::map<framekit::Partition, std::size_t> sizes;
  for (const auto& [id, partition] : assignment.partition_of) {
    ++sizes[partition];
  }
  std::cout << "split sizes: train " << sizes[framekit::Partition::train]
            << " / dev " << sizes[framekit::Partition::dev] << " / test "
            << sizes[framekit::Partition::test] << "\n";
  return kExitOk;
}

int cmd_train(const std::string& corpus_path, const std::string& split_path,
              int epochs, std::uint64_t seed, const std::string& model_out) {
  if (epochs <= 0) {
    throw Error(ErrorKind::usage, "--epochs must be positive");
  }
  framekit::Corpus corpus = framekit::load_corpus(corpus_path);
  framekit::SplitAssignment assignment = framekit::load_split(split_path);
  framekit::Corpus train_corpus =
      framekit::project(corpus, assignment, framekit::Partition::train);
  framekit::TrainedParser parser =
      framekit::train(train_corpus, epochs, seed);
  framekit::save_model(parser, model_out);
  std::cout << "trained on " << train_corpus.annotations.size()
            << " annotations / " << train_corpus.sentences.size()
            << " sentences\n";
  std::cout << "lexicon entries: " << parser.lexicon.size() << "\n";
  std::cout << "frame train accuracy: "
            << fixed4(parser.stats.frame_train_accuracy) << "\n";
  std::cout << "role token train accuracy: "
            << fixed4(parser.stats.role_token_train_accuracy) << "\n";
  return kExitOk;
}

int cmd_predict(const std::string& model_path, const std::string& corpus_path,
                const std::string& split_path, const std::string& partition,
                const std::string& out_path, const std::string& provenance) {
  framekit::Partition target_partition =
      framekit::partition_from_string(partition);
  framekit::TrainedParser parser = framekit::load_model(model_path);
  framekit::Corpus corpus = framekit::load_corpus(corpus_path);
  framekit::SplitAssignment assignment = framekit::load_split(split_path);
  framekit::Corpus target =
      framekit::project(corpus, assignment, target_partition);

  std::vector<framekit::PredictionRow> rows;
  std::size_t empty_sentences = 0;
  for (const framekit::Sentence& sentence : target.sentences) {
    framekit::PredictionSet set = framekit::predict(parser, sentence);
    if (set.annotations.empty()) ++empty_sentences;
    for (framekit::Annotation& annotation : set.annotations) {
      rows.push_back({std::move(annotation),
                      provenance.empty() ? set.provenance : provenance});
    }
  }
  framekit::save_predictions(rows, out_path);
  std::cout << rows.size() << " predictions over " << target.sentences.size()
            << " sentences (" << empty_sentences << " without any match)\n";
  return kExitOk;
}

struct ScoredSystem {
  std::string provenance;
  std::vector<framekit::ScoreReport> reports;
};

std::string render_grid(const std::vector<ScoredSystem>& systems,
                        const std::vector<framekit::ScoreMode>& modes,
                        double threshold) {
  std::size_t name_width = std::string("provenance").size();
  for (const ScoredSystem& system : systems) {
    name_width = std::max(name_width, system.provenance.size());
  }
  const int w = static_cast<int>(name_width);

  std::ostringstream out;
  out << "threshold " << fixed4(threshold) << "\n";
  const int block_width = static_cast<int>(21 * modes.size());
  out << std::left << std::setw(w) << "" << "  ";
  out << std::setw(block_width) << "frames" << "roles\n";
  out << std::setw(w) << "" << "  ";
  for (int block = 0; block < 2; ++block) {
    for (framekit::ScoreMode mode : modes) {
      out << std::left << std::setw(21) << to_string(mode);
    }
  }
  out << "\n";
  out << std::left << std::setw(w) << "provenance" << "  ";
  for (std::size_t i = 0; i < 2 * modes.size(); ++i) {
    out << std::left << std::setw(7) << "R" << std::setw(7) << "P"
        << std::setw(7) << "F";
  }
  out << "\n";
  for (const ScoredSystem& system : systems) {
    out << std::left << std::setw(w) << system.provenance << "  ";
    for (int block = 0; block < 2; ++block) {
      for (std::size_t m = 0; m < modes.size(); ++m) {
        const framekit::ScoreReport& report = system.reports[m];
        const framekit::LayerScore& layer =
            block == 0 ? report.frames : report.roles;
        out << std::setw(7) << fixed4(layer.recall) << std::setw(7)
            << fixed4(layer.precision) << std::setw(7) << fixed4(layer.f1);
      }
    }
    out << "\n";
  }
  return out.str();
}

int cmd_score(const std::string& gold_path, const std::string& preds_path,
              const std::string& mode_text, double threshold,
              const std::string& report_out, const std::string& split_path,
              const std::string& partition) {
  std::vector<framekit::ScoreMode> modes = parse_modes(mode_text);
  if (threshold < 0.0 || threshold > 1.0) {
    throw Error(ErrorKind::usage, "--threshold must lie in [0,1]");
  }
  framekit::Corpus gold = framekit::load_corpus(gold_path);
  if (!split_path.empty()) {
    // Score against one partition of the gold corpus (the usual setup when
    // predictions were produced for that partition).
    framekit::SplitAssignment assignment = framekit::load_split(split_path);
    gold = framekit::project(gold, assignment,
                             framekit::partition_from_string(partition));
  }
  std::vector<framekit::PredictionRow> rows =
      framekit::load_predictions(preds_path);

  std::vector<ScoredSystem> systems;
  for (const std::string& provenance : framekit::provenances(rows)) {
    std::vector<framekit::PredictionRow> subset;
    for (const framekit::PredictionRow& row : rows) {
      if (row.provenance == provenance) subset.push_back(row);
    }
    auto by_sentence = framekit::group_by_sentence(subset);
    ScoredSystem system;
    system.provenance = provenance;
    for (framekit::ScoreMode mode : modes) {
      system.reports.push_back(
          framekit::score(gold, by_sentence, mode, threshold));
    }
    systems.push_back(std::move(system));
  }
  if (systems.empty()) {
    // No predictions at all: still score the empty system once.
    ScoredSystem system;
    system.provenance = "(none)";
    for (framekit::ScoreMode mode : modes) {
      system.reports.push_back(framekit::score(gold, {}, mode, threshold));
    }
    systems.push_back(std::move(system));
  }

  std::cout << render_grid(systems, modes, threshold);

  if (!report_out.empty()) {
    ojson report;
    report["threshold"] = round4(threshold);
    report["systems"] = ojson::array();
    for (const ScoredSystem& system : systems) {
      ojson system_obj;
      system_obj["provenance"] = system.provenance;
      system_obj["reports"] = ojson::array();
      for (const framekit::ScoreReport& r : system.reports) {
        system_obj["reports"].push_back(
            ojson::parse(framekit::score_report_to_json(r)));
      }
      report["systems"].push_back(std::move(system_obj));
    }
    std::ofstream out(report_out, std::ios::binary);
    if (!out) throw Error(ErrorKind::io, "cannot open " + report_out);
    out << report.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_validate(const std::string& corpus_path, const std::string& preds_path,
                 std::int64_t max_violations) {
  framekit::Corpus corpus = framekit::load_corpus(corpus_path);
  std::vector<framekit::Annotation> annotations;
  if (preds_path.empty()) {
    annotations = corpus.annotations;
  } else {
    for (framekit::PredictionRow& row : framekit::load_predictions(preds_path)) {
      annotations.push_back(std::move(row.annotation));
    }
  }
  std::vector<framekit::Violation> violations =
      framekit::validate(corpus, annotations);
  framekit::write_violations(violations, std::cout);
  std::cout << "consistency_rate "
            << fixed4(framekit::consistency_rate(violations,
                                                 annotations.size()))
            << "\n";
  framekit::log::info(std::to_string(violations.size()) + " violations over " +
                      std::to_string(annotations.size()) + " annotations");
  return static_cast<std::int64_t>(violations.size()) <= max_violations
             ? kExitOk
             : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frame semantic parsing toolkit for exemplar corpora"};
  app.require_subcommand(1);

  std::string in_path, out_path, corpus_path, split_path, model_path,
      preds_path, gold_path, json_out, report_out, provenance;
  std::string ratios_text = "0.85,0.05,0.10";
  std::string mode_text = "both";
  std::string partition = "test";
  std::uint64_t seed = 42;
  int epochs = 5;
  int top_k = 5;
  double threshold = 1.0;
  bool merge_lu = false;
  std::int64_t max_violations = 0;

  CLI::App* ingest = app.add_subcommand("ingest", "canonicalize a corpus file");
  ingest->add_option("--in", in_path, "input corpus JSONL")->required();
  ingest->add_option("--out", out_path, "canonical output path")->required();

  CLI::App* stats = app.add_subcommand("stats", "corpus statistics");
  stats->add_option("--corpus", corpus_path, "corpus JSONL")->required();
  stats->add_option("--top-k", top_k, "length of the top lists");
  stats->add_flag("--merge-lu-languages", merge_lu,
                  "merge LU counts that share an id across languages");
  stats->add_option("--json-out", json_out, "write the JSON report here");

  CLI::App* split = app.add_subcommand("split", "deterministic split");
  split->add_option("--corpus", corpus_path, "corpus JSONL")->required();
  split->add_option("--ratios", ratios_text, "train,dev,test ratios");
  split->add_option("--seed", seed, "shuffle seed");
  split->add_option("--out", out_path, "assignment output path")->required();

  CLI::App* train = app.add_subcommand("train", "train the baseline parser");
  train->add_option("--corpus", corpus_path, "corpus JSONL")->required();
  train->add_option("--split", split_path, "split assignment")->required();
  train->add_option("--epochs", epochs, "training epochs");
  train->add_option("--seed", seed, "shuffle seed");
  train->add_option("--model-out", model_path, "model output path")->required();

  CLI::App* predict = app.add_subcommand("predict", "run the baseline parser");
  predict->add_option("--model", model_path, "model file")->required();
  predict->add_option("--corpus", corpus_path, "corpus JSONL")->required();
  predict->add_option("--split", split_path, "split assignment")->required();
  predict->add_option("--partition", partition, "train, dev, or test");
  predict->add_option("--out", out_path, "predictions output path")->required();
  predict->add_option("--provenance", provenance,
                      "provenance tag for the output rows");

  CLI::App* score = app.add_subcommand("score", "score predictions vs gold");
  score->add_option("--gold", gold_path, "gold corpus JSONL")->required();
  score->add_option("--preds", preds_path, "prediction JSONL")->required();
  score->add_option("--mode", mode_text, "raw, gold-pred, or both");
  score->add_option("--threshold", threshold, "confidence threshold");
  CLI::Option* score_split = score->add_option(
      "--split", split_path,
      "restrict gold to one partition of this assignment");
  score->add_option("--partition", partition, "partition to score against")
      ->needs(score_split);
  score->add_option("--report-out", report_out, "write the JSON report here");

  CLI::App* validate =
      app.add_subcommand("validate", "ontology consistency check");
  validate->add_option("--corpus", corpus_path, "corpus JSONL")->required();
  validate->add_option("--preds", preds_path,
                       "prediction JSONL (default: the corpus's own "
                       "annotations)");
  validate->add_option("--max-violations", max_violations,
                       "largest violation count that still exits 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(ingest)) return cmd_ingest(in_path, out_path);
    if (app.got_subcommand(stats)) {
      return cmd_stats(corpus_path, top_k, merge_lu, json_out);
    }
    if (app.got_subcommand(split)) {
      return cmd_split(corpus_path, ratios_text, seed, out_path);
    }
    if (app.got_subcommand(train)) {
      return cmd_train(corpus_path, split_path, epochs, seed, model_path);
    }
    if (app.got_subcommand(predict)) {
      return cmd_predict(model_path, corpus_path, split_path, partition,
                         out_path, provenance);
    }
    if (app.got_subcommand(score)) {
      return cmd_score(gold_path, preds_path, mode_text, threshold,
                       report_out, split_path, partition);
    }
    if (app.got_subcommand(validate)) {
      return cmd_validate(corpus_path, preds_path, max_violations);
    }
  } catch (const Error& e) {
    framekit::log::error(e.what());
    return e.kind() == ErrorKind::usage ? kExitUsage : kExitData;
  } catch (const std::exception& e) {
    framekit::log::error(e.what());
    return kExitData;
  }
  return kExitUsage;
}
