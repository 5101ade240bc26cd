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

#ifndef NAMELINK_PIPELINE_H_
#define NAMELINK_PIPELINE_H_

#include <optional>
#include <vector>

#include "namelink/analyzer.h"
#include "namelink/config.h"
#include "namelink/dictionary.h"
#include "namelink/match_engine.h"
#include "namelink/metrics.h"

namespace namelink {

struct PipelineResult {
  std::vector<MatchDecision> decisions;
  size_t review_items = 0;
  // Set when expert labels were configured.
  std::optional<ConfusionMatrix> matrix;
  std::optional<MetricsReport> report;
};

// Builtin tables, or the prefix table from `prefixes.path`.
NameAnalyzer MakeAnalyzer(const PipelineConfig& config);

// Builds the dictionary from `dictionary.pairs` when configured (saving it
// to `dictionary.path` if that is set too), otherwise loads
// `dictionary.path`. Throws kDictionaryMissing when neither is available.
Dictionary PrepareDictionary(const PipelineConfig& config,
                             const NameAnalyzer& analyzer,
                             Diagnostics* diag = nullptr);

// Ingest, dictionary, blocking, matching, classification and, when labels
// are configured, evaluation. Writes every configured output file; the
// review queue file holds the possible-match decisions in results format.
// Identical inputs give byte-identical outputs.
PipelineResult RunPipeline(const PipelineConfig& config,
                           Diagnostics* diag = nullptr);

}  // namespace namelink

#endif  // NAMELINK_PIPELINE_H_
