// Copyright 2026 The Namelink Authors.
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

#include "namelink/pipeline.h"

#include <filesystem>
#include <fstream>

#include "namelink/dataset_io.h"
#include "namelink/results_io.h"

namespace namelink {
namespace {

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path);
}

}  // namespace

NameAnalyzer MakeAnalyzer(const PipelineConfig& config) {
  PrefixTable prefixes = config.prefixes_path.empty()
                             ? PrefixTable::Builtin()
                             : PrefixTable::Load(config.prefixes_path);
  return NameAnalyzer(std::move(prefixes), CodeTable::Builtin(),
                      config.analyzer);
}

Dictionary PrepareDictionary(const PipelineConfig& config,
                             const NameAnalyzer& analyzer,
                             Diagnostics* diag) {
  if (!config.dictionary_pairs.empty()) {
    std::vector<NamePair> pairs = AnalyzePairs(
        LoadNamePairs(config.dictionary_pairs, config.pairs_arabic_column,
                      config.pairs_latin_column, diag),
        analyzer, config.pairs_latin_order, diag);
    std::vector<ExpertEdit> edits;
    if (!config.dictionary_edits.empty()) {
      edits = LoadExpertEdits(config.dictionary_edits);
    }
    Dictionary dict = BuildDictionary(config.dictionary_strategy, pairs,
                                      analyzer, edits, diag);
    if (!config.dictionary_path.empty()) dict.SaveFile(config.dictionary_path);
    return dict;
  }
  if (config.dictionary_path.empty()) {
    throw Error(ErrorCode::kDictionaryMissing,
                "neither dictionary.path nor dictionary.pairs is set");
  }
  if (!std::filesystem::exists(config.dictionary_path)) {
    throw Error(ErrorCode::kDictionaryMissing,
                "dictionary not found: " + config.dictionary_path);
  }
  Dictionary dict = Dictionary::LoadFile(config.dictionary_path);
  if (!config.dictionary_edits.empty()) {
    dict = ApplyExpertEdits(dict, LoadExpertEdits(config.dictionary_edits),
                            analyzer, diag);
  }
  return dict;
}

PipelineResult RunPipeline(const PipelineConfig& config, Diagnostics* diag) {
  ValidateConfig(config);
  NameAnalyzer analyzer = MakeAnalyzer(config);
  Dictionary dict = PrepareDictionary(config, analyzer, diag);
  Dataset source = Ingest(config.source, diag);
  Dataset destination = Ingest(config.destination, diag);
  if (source.records.empty()) {
    Warn(diag, ErrorCode::kMalformedData, "source dataset has no records");
  }

  MatchEngine engine(analyzer, dict, config.match);
  engine.Index(destination, config.block, diag);

  PipelineResult result;
  result.decisions = engine.MatchAll(source, diag);

  std::vector<MatchDecision> queue;
  for (const MatchDecision& d : result.decisions) {
    if (d.outcome == Outcome::kPossible) queue.push_back(d);
  }
  result.review_items = queue.size();

  if (!config.results_path.empty()) {
    WriteResultsFile(config.results_path, result.decisions);
  }
  if (!config.review_queue_path.empty()) {
    WriteResultsFile(config.review_queue_path, queue);
  }
  if (!config.expert_labels.empty()) {
    ExpertLabels labels = LoadExpertLabels(config.expert_labels, diag);
    result.matrix = BuildMatrix(result.decisions, labels);
    result.report = ComputeReport(*result.matrix);
    if (!config.report_path.empty()) {
      WriteText(config.report_path,
                ReportToJson(*result.report, *result.matrix));
    }
  }
  return result;
}

}  // namespace namelink
