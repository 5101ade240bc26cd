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

#ifndef NAMELINK_PHONETIC_H_
#define NAMELINK_PHONETIC_H_

#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "namelink/error.h"
#include "namelink/parse.h"

namespace namelink {

// Four characters: an uppercase Latin letter followed by three digits.
class SoundexCode {
 public:
  // Throws kMalformedData unless `code` matches [A-Z][0-9]{3}.
  explicit SoundexCode(std::string code);

  static bool IsValid(std::string_view code);

  const std::string& str() const { return code_; }
  char letter() const { return code_[0]; }
  std::string_view digits() const { return std::string_view(code_).substr(1); }

  auto operator<=>(const SoundexCode&) const = default;

 private:
  std::string code_;
};

// One segment for simple names, two concatenated segments for compounds
// ("abdel aziz" -> A134A220).
class CombinedSoundexCode {
 public:
  explicit CombinedSoundexCode(SoundexCode simple);
  CombinedSoundexCode(const SoundexCode& prefix, const SoundexCode& head);

  // Throws kMalformedData unless `code` is one or two valid segments.
  static CombinedSoundexCode Parse(std::string_view code);

  const std::string& str() const { return code_; }
  size_t segments() const { return code_.size() / 4; }

  auto operator<=>(const CombinedSoundexCode&) const = default;

 private:
  explicit CombinedSoundexCode(std::string code) : code_(std::move(code)) {}
  std::string code_;
};

// Letter-to-digit groups for both scripts plus the Latin letters an Arabic
// initial may be transliterated to.
class CodeTable {
 public:
  // Tables shipped in data/english_codes.tsv, data/arabic_codes.tsv and
  // data/romanization.tsv.
  static const CodeTable& Builtin();

  // Streams hold `char<TAB>digit` and `char<TAB>latin-letters` lines.
  static CodeTable Parse(std::istream& english, std::istream& arabic,
                         std::istream& romanization);
  static CodeTable Load(const std::string& english_path,
                        const std::string& arabic_path,
                        const std::string& romanization_path);

  std::optional<int> EnglishCode(char letter) const;
  std::optional<int> ArabicCode(char32_t letter) const;
  // Uppercase Latin letters, primary first. Empty when the letter is unknown.
  std::string_view Romanizations(char32_t letter) const;
  // Arabic letters whose romanization set contains `latin` (any case).
  std::vector<char32_t> ArabicInitialsFor(char latin) const;

  const std::map<char, int>& english_map() const { return english_; }
  const std::map<char32_t, int>& arabic_map() const { return arabic_; }
  const std::map<char32_t, std::string>& romanization() const {
    return romanization_;
  }

 private:
  std::map<char, int> english_;
  std::map<char32_t, int> arabic_;
  std::map<char32_t, std::string> romanization_;
};

// Russell Soundex over a lowercase Latin token. Spaces are ignored. Letters
// with the same code that were adjacent in the original spelling collapse to
// one; a dropped letter between them keeps both. Throws kEmptyToken and
// kNonLatinContent.
SoundexCode EnglishSoundex(std::string_view token,
                           const CodeTable& table = CodeTable::Builtin());

// Arabic Soundex with the first letter emitted as its primary romanization,
// so codes join directly against EnglishSoundex. Characters outside the
// tables are skipped and reported as kUnmappedCharacter. Throws kEmptyToken.
SoundexCode ArabicSoundex(std::string_view token,
                          const CodeTable& table = CodeTable::Builtin(),
                          Diagnostics* diag = nullptr);

// One code per romanization of the first letter; digits are shared.
std::vector<SoundexCode> ArabicSoundexVariants(
    std::string_view token, const CodeTable& table = CodeTable::Builtin(),
    Diagnostics* diag = nullptr);

// Plain four-character code(s) of a token of either script, spaces ignored.
std::vector<SoundexCode> SoundexVariants(
    std::string_view token, const CodeTable& table = CodeTable::Builtin(),
    Diagnostics* diag = nullptr);

// Prefix compounds code the canonical prefix and the head separately and
// concatenate; postfix compounds code head and postfix. Simple tokens and
// compounds whose prefix is only the definite article get a plain code. For
// Arabic, an article leading the head is coded with the prefix
// (abd + al-aziz -> "abdal" + "aziz").
CombinedSoundexCode CombinedSoundex(
    const NameToken& token, const CodeTable& table = CodeTable::Builtin(),
    Diagnostics* diag = nullptr);

// Every combination of first-letter romanizations across the segments.
std::vector<CombinedSoundexCode> CombinedSoundexVariants(
    const NameToken& token, const CodeTable& table = CodeTable::Builtin(),
    Diagnostics* diag = nullptr);

}  // namespace namelink

#endif  // NAMELINK_PHONETIC_H_
