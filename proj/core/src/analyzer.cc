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

#include "namelink/analyzer.h"

#include <utility>

namespace namelink {

NameAnalyzer::NameAnalyzer()
    : prefixes_(PrefixTable::Builtin()), codes_(CodeTable::Builtin()) {}

NameAnalyzer::NameAnalyzer(PrefixTable prefixes, CodeTable codes,
                           AnalyzerOptions options)
    : prefixes_(std::move(prefixes)),
      codes_(std::move(codes)),
      options_(options) {}

NormalizedName NameAnalyzer::NormalizeText(std::string_view text) const {
  return Normalize(RawName::FromText(std::string(text)), options_.normalize);
}

ParsedName NameAnalyzer::Analyze(std::string_view text, NameOrder order,
                                 Diagnostics* diag) const {
  ParsedName parsed = Split(NormalizeText(text));
  parsed = Reorder(parsed, order, prefixes_);
  return MergeCompounds(parsed, prefixes_, options_.parse, diag);
}

}  // namespace namelink
