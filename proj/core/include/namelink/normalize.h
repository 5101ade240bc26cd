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

#ifndef NAMELINK_NORMALIZE_H_
#define NAMELINK_NORMALIZE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace namelink {

enum class Script { kArabic, kLatin, kMixed };

std::string_view ScriptName(Script script);

// Arabic iff at least one Arabic-block character and no Latin letter; Latin
// iff the reverse; Mixed otherwise (including text with neither).
Script DetectScript(std::string_view text);

struct RawName {
  std::string text;
  Script script = Script::kMixed;

  static RawName FromText(std::string text);
};

struct NormalizedName {
  std::string text;
  Script script = Script::kLatin;
  // Number of words that preceded the first comma in the raw Latin text
  // ("Wadie, Bassem S" -> 1). Unset when the raw text had no usable comma.
  std::optional<size_t> surname_words;
};

struct NormalizeOptions {
  // Table value for waw-with-hamza is alef; setting this false folds it to
  // plain waw instead.
  bool waw_hamza_to_alef = true;
  // Drops a word-final standalone hamza that follows a long vowel
  // (hani + hamza -> hani). When false the hamza is kept.
  bool drop_final_hamza = true;
};

// Lowercases, folds Latin diacritics, turns - _ , . / and whitespace into
// single spaces and strips digits. Throws kNonLatinContent, and kEmptyName
// when no letter survives.
NormalizedName NormalizeLatin(const RawName& raw);

// Folds alef/hamza/yeh/teh-marbuta variants, strips tashkeel, tatweel and
// digits. Presentation forms are mapped to base letters first.
// Throws kNonArabicContent when the text holds Latin letters and kEmptyName
// when no letter survives.
NormalizedName NormalizeArabic(const RawName& raw,
                               const NormalizeOptions& options = {});

// Dispatches on the detected script. Throws kEmptyName when the text has no
// letters at all.
NormalizedName Normalize(const RawName& raw,
                         const NormalizeOptions& options = {});

}  // namespace namelink

#endif  // NAMELINK_NORMALIZE_H_
