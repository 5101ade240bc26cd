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

#ifndef NAMELINK_CONFIG_H_
#define NAMELINK_CONFIG_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "namelink/analyzer.h"
#include "namelink/dataset_io.h"
#include "namelink/dictionary.h"
#include "namelink/match_engine.h"

namespace namelink {

// Settings for one end-to-end run. Paths are absolute or already resolved
// against the directory of the config file.
struct PipelineConfig {
  DatasetDescriptor source;
  DatasetDescriptor destination;
  std::vector<std::string> block;

  std::string dictionary_path;
  DictionaryStrategy dictionary_strategy = DictionaryStrategy::kCombined;
  std::string dictionary_pairs;
  std::string pairs_arabic_column = "arabic";
  std::string pairs_latin_column = "latin";
  NameOrder pairs_latin_order = NameOrder::kFirstNameFirst;
  std::string dictionary_edits;

  std::string prefixes_path;
  AnalyzerOptions analyzer;
  MatchOptions match;

  std::string results_path;
  std::string report_path;
  std::string review_queue_path;
  std::string expert_labels;

  std::string review_host = "127.0.0.1";
  int review_port = 8080;
  std::string review_journal;
  std::string review_static_dir;
};

// `key = value` lines; '#' starts a comment line. Keys:
//   source.path source.id_column source.name_column source.order
//   source.delimiter (and the same under destination.)
//   block                       comma-separated field names
//   dictionary.path dictionary.strategy dictionary.pairs
//   dictionary.arabic_column dictionary.latin_column dictionary.latin_order
//   dictionary.edits prefixes.path
//   normalize.waw_hamza_to_alef normalize.drop_final_hamza
//   parse.merge_bare_articles
//   match.threshold match.floor match.max_edit_distance match.relax_order
//   match.verify_reverse match.threads
//   output.results output.report output.review_queue expert.labels
//   review.host review.port review.journal review.static_dir
// Relative paths are resolved against `base_dir`. Throws kConfigError.
PipelineConfig ParseConfig(std::istream& in, const std::string& base_dir = "");
// Throws kConfigError, including when the file cannot be read.
PipelineConfig LoadConfig(const std::string& path);

// Checks ranges: thresholds in [0, 1], floor <= threshold, port in range.
// Throws kConfigError.
void ValidateConfig(const PipelineConfig& config);

}  // namespace namelink

#endif  // NAMELINK_CONFIG_H_
