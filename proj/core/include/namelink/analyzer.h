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

#ifndef NAMELINK_ANALYZER_H_
#define NAMELINK_ANALYZER_H_

#include <string>
#include <string_view>

#include "namelink/error.h"
#include "namelink/normalize.h"
#include "namelink/parse.h"
#include "namelink/phonetic.h"

namespace namelink {

struct AnalyzerOptions {
  NormalizeOptions normalize;
  ParseOptions parse;
};

// Bundles the tables a full name passes through on its way to tokens:
// normalize, split, reorder, merge compounds. Immutable once built.
class NameAnalyzer {
 public:
  NameAnalyzer();
  NameAnalyzer(PrefixTable prefixes, CodeTable codes,
               AnalyzerOptions options = {});

  // Throws the normalization and split errors (kNonLatinContent,
  // kNonArabicContent, kEmptyName, kEncodingError).
  ParsedName Analyze(std::string_view text,
                     NameOrder order = NameOrder::kFirstNameFirst,
                     Diagnostics* diag = nullptr) const;

  NormalizedName NormalizeText(std::string_view text) const;

  const PrefixTable& prefixes() const { return prefixes_; }
  const CodeTable& codes() const { return codes_; }
  const AnalyzerOptions& options() const { return options_; }

 private:
  PrefixTable prefixes_;
  CodeTable codes_;
  AnalyzerOptions options_;
};

}  // namespace namelink

#endif  // NAMELINK_ANALYZER_H_
