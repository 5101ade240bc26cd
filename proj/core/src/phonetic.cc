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

#include "namelink/phonetic.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "builtin_data.h"
#include "namelink/unicode.h"

namespace namelink {
namespace {

const std::u32string kArabicArticle = U"ال";

std::string StripSpaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c != ' ') out += c;
  }
  return out;
}

// Reads `key<TAB>value` lines, skipping blanks and '#' comments.
template <typename Fn>
void ReadTable(std::istream& in, std::string_view what, Fn&& fn) {
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size()) {
      throw Error(ErrorCode::kMalformedData,
                  std::string(what) + " line " + std::to_string(line_no) +
                      ": expected key<TAB>value");
    }
    std::u32string key = DecodeUtf8(line.substr(0, tab));
    if (key.size() != 1) {
      throw Error(ErrorCode::kMalformedData,
                  std::string(what) + " line " + std::to_string(line_no) +
                      ": key must be one character");
    }
    fn(key[0], line.substr(tab + 1), line_no);
  }
}

int ParseDigit(const std::string& value, std::string_view what,
               size_t line_no) {
  if (value.size() != 1 || value[0] < '0' || value[0] > '6') {
    throw Error(ErrorCode::kMalformedData,
                std::string(what) + " line " + std::to_string(line_no) +
                    ": code must be a digit 0-6");
  }
  return value[0] - '0';
}

// Steps shared by both scripts once letters are mapped to codes: drop group
// 0, collapse codes adjacent in the original spelling, pad or truncate.
// `first_code` is the code of the retained first letter, if it has one.
std::string EncodeDigits(std::optional<int> first_code,
                         const std::vector<std::optional<int>>& rest) {
  std::string digits;
  std::optional<int> prev = first_code;
  for (const std::optional<int>& code : rest) {
    if (!code) continue;  // unmapped: skipped entirely
    if (prev && *code == *prev) continue;
    prev = code;
    if (*code != 0 && digits.size() < 3) digits += static_cast<char>('0' + *code);
  }
  digits.resize(3, '0');
  return digits;
}

struct ArabicParts {
  std::string digits;
  std::string_view initials;  // romanizations of the first letter
};

ArabicParts ArabicSoundexParts(std::string_view token, const CodeTable& table,
                               Diagnostics* diag) {
  std::u32string letters;
  for (char32_t cp : DecodeUtf8(token)) {
    if (cp != U' ') letters.push_back(cp);
  }
  size_t first = 0;
  while (first < letters.size() && table.Romanizations(letters[first]).empty()) {
    Warn(diag, ErrorCode::kUnmappedCharacter,
         "no romanization for initial '" + EncodeUtf8(letters[first]) +
             "' in '" + std::string(token) + "'");
    ++first;
  }
  if (first >= letters.size()) {
    throw Error(ErrorCode::kEmptyToken,
                "no codable letters in '" + std::string(token) + "'");
  }
  std::vector<std::optional<int>> rest;
  for (size_t i = first + 1; i < letters.size(); ++i) {
    std::optional<int> code = table.ArabicCode(letters[i]);
    if (!code) {
      Warn(diag, ErrorCode::kUnmappedCharacter,
           "skipping '" + EncodeUtf8(letters[i]) + "' in '" +
               std::string(token) + "'");
    }
    rest.push_back(code);
  }
  return {EncodeDigits(table.ArabicCode(letters[first]), rest),
          table.Romanizations(letters[first])};
}

bool StartsWithArabic(std::string_view token) {
  return InArabicBlock(FirstCodePoint(token));
}

bool PrefixIsArticleOnly(std::string_view prefix) {
  size_t start = 0;
  bool any = false;
  while (start < prefix.size()) {
    size_t end = prefix.find(' ', start);
    if (end == std::string_view::npos) end = prefix.size();
    if (end > start) {
      if (!IsArticle(prefix.substr(start, end - start))) return false;
      any = true;
    }
    start = end + 1;
  }
  return any;
}

// The two strings coded for a compound token, or nullopt for tokens that
// take a single plain code.
std::optional<std::pair<std::string, std::string>> CompoundSegments(
    const NameToken& token) {
  if (!token.is_compound) return std::nullopt;
  if (!token.postfix.empty()) {
    return std::make_pair(StripSpaces(token.head), StripSpaces(token.postfix));
  }
  if (token.prefix.empty() || PrefixIsArticleOnly(token.prefix)) {
    return std::nullopt;
  }
  std::string prefix = StripSpaces(token.prefix);
  std::string head = token.head;
  std::u32string head32 = DecodeUtf8(head);
  if (head32.size() > kArabicArticle.size() &&
      head32.compare(0, kArabicArticle.size(), kArabicArticle) == 0) {
    prefix += EncodeUtf8(kArabicArticle);
    head = EncodeUtf8(head32.substr(kArabicArticle.size()));
  }
  return std::make_pair(prefix, head);
}

}  // namespace

SoundexCode::SoundexCode(std::string code) : code_(std::move(code)) {
  if (!IsValid(code_)) {
    throw Error(ErrorCode::kMalformedData, "bad Soundex code '" + code_ + "'");
  }
}

bool SoundexCode::IsValid(std::string_view code) {
  return code.size() == 4 && code[0] >= 'A' && code[0] <= 'Z' &&
         std::all_of(code.begin() + 1, code.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

CombinedSoundexCode::CombinedSoundexCode(SoundexCode simple)
    : code_(simple.str()) {}

CombinedSoundexCode::CombinedSoundexCode(const SoundexCode& prefix,
                                         const SoundexCode& head)
    : code_(prefix.str() + head.str()) {}

CombinedSoundexCode CombinedSoundexCode::Parse(std::string_view code) {
  if ((code.size() == 4 && SoundexCode::IsValid(code)) ||
      (code.size() == 8 && SoundexCode::IsValid(code.substr(0, 4)) &&
       SoundexCode::IsValid(code.substr(4)))) {
    return CombinedSoundexCode(std::string(code));
  }
  throw Error(ErrorCode::kMalformedData,
              "bad combined Soundex code '" + std::string(code) + "'");
}

const CodeTable& CodeTable::Builtin() {
  static const CodeTable table = [] {
    std::istringstream english{std::string(internal::kBuiltinEnglishCodes)};
    std::istringstream arabic{std::string(internal::kBuiltinArabicCodes)};
    std::istringstream roman{std::string(internal::kBuiltinRomanization)};
    return Parse(english, arabic, roman);
  }();
  return table;
}

CodeTable CodeTable::Parse(std::istream& english, std::istream& arabic,
                           std::istream& romanization) {
  CodeTable table;
  ReadTable(english, "english code table",
            [&](char32_t key, const std::string& value, size_t line_no) {
              if (key > 0x7F || !std::isalpha(static_cast<int>(key))) {
                throw Error(ErrorCode::kMalformedData,
                            "english code table line " +
                                std::to_string(line_no) +
                                ": key must be a Latin letter");
              }
              table.english_[static_cast<char>(std::tolower(
                  static_cast<int>(key)))] =
                  ParseDigit(value, "english code table", line_no);
            });
  ReadTable(arabic, "arabic code table",
            [&](char32_t key, const std::string& value, size_t line_no) {
              table.arabic_[key] =
                  ParseDigit(value, "arabic code table", line_no);
            });
  ReadTable(romanization, "romanization table",
            [&](char32_t key, const std::string& value, size_t line_no) {
              std::string letters;
              for (char c : value) {
                if (!std::isalpha(static_cast<unsigned char>(c))) {
                  throw Error(ErrorCode::kMalformedData,
                              "romanization table line " +
                                  std::to_string(line_no) +
                                  ": expected Latin letters");
                }
                char upper =
                    static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
                if (letters.find(upper) == std::string::npos) letters += upper;
              }
              table.romanization_[key] = letters;
            });
  return table;
}

CodeTable CodeTable::Load(const std::string& english_path,
                          const std::string& arabic_path,
                          const std::string& romanization_path) {
  std::ifstream english(english_path);
  std::ifstream arabic(arabic_path);
  std::ifstream roman(romanization_path);
  if (!english) throw Error(ErrorCode::kIoError, "cannot open " + english_path);
  if (!arabic) throw Error(ErrorCode::kIoError, "cannot open " + arabic_path);
  if (!roman) {
    throw Error(ErrorCode::kIoError, "cannot open " + romanization_path);
  }
  return Parse(english, arabic, roman);
}

std::optional<int> CodeTable::EnglishCode(char letter) const {
  auto it = english_.find(
      static_cast<char>(std::tolower(static_cast<unsigned char>(letter))));
  if (it == english_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> CodeTable::ArabicCode(char32_t letter) const {
  auto it = arabic_.find(letter);
  if (it == arabic_.end()) return std::nullopt;
  return it->second;
}

std::string_view CodeTable::Romanizations(char32_t letter) const {
  auto it = romanization_.find(letter);
  if (it == romanization_.end()) return {};
  return it->second;
}

std::vector<char32_t> CodeTable::ArabicInitialsFor(char latin) const {
  const char upper =
      static_cast<char>(std::toupper(static_cast<unsigned char>(latin)));
  std::vector<char32_t> out;
  for (const auto& [letter, latins] : romanization_) {
    if (latins.find(upper) != std::string::npos) out.push_back(letter);
  }
  return out;
}

SoundexCode EnglishSoundex(std::string_view token, const CodeTable& table) {
  std::string letters = StripSpaces(token);
  if (letters.empty()) {
    throw Error(ErrorCode::kEmptyToken, "empty token");
  }
  std::vector<std::optional<int>> codes;
  codes.reserve(letters.size());
  for (char c : letters) {
    std::optional<int> code = table.EnglishCode(c);
    if (!code) {
      throw Error(ErrorCode::kNonLatinContent,
                  "cannot code '" + std::string(1, c) + "' in '" +
                      std::string(token) + "'");
    }
    codes.push_back(code);
  }
  std::vector<std::optional<int>> rest(codes.begin() + 1, codes.end());
  std::string code(1, static_cast<char>(
                          std::toupper(static_cast<unsigned char>(letters[0]))));
  code += EncodeDigits(codes[0], rest);
  return SoundexCode(std::move(code));
}

SoundexCode ArabicSoundex(std::string_view token, const CodeTable& table,
                          Diagnostics* diag) {
  ArabicParts parts = ArabicSoundexParts(token, table, diag);
  return SoundexCode(std::string(1, parts.initials[0]) + parts.digits);
}

std::vector<SoundexCode> ArabicSoundexVariants(std::string_view token,
                                               const CodeTable& table,
                                               Diagnostics* diag) {
  ArabicParts parts = ArabicSoundexParts(token, table, diag);
  std::vector<SoundexCode> out;
  for (char initial : parts.initials) {
    out.emplace_back(std::string(1, initial) + parts.digits);
  }
  return out;
}

std::vector<SoundexCode> SoundexVariants(std::string_view token,
                                         const CodeTable& table,
                                         Diagnostics* diag) {
  if (StartsWithArabic(token)) return ArabicSoundexVariants(token, table, diag);
  return {EnglishSoundex(token, table)};
}

CombinedSoundexCode CombinedSoundex(const NameToken& token,
                                    const CodeTable& table,
                                    Diagnostics* diag) {
  return CombinedSoundexVariants(token, table, diag).front();
}

std::vector<CombinedSoundexCode> CombinedSoundexVariants(
    const NameToken& token, const CodeTable& table, Diagnostics* diag) {
  std::vector<CombinedSoundexCode> out;
  auto segments = CompoundSegments(token);
  if (!segments) {
    for (SoundexCode& code : SoundexVariants(token.canonical, table, diag)) {
      out.emplace_back(std::move(code));
    }
    return out;
  }
  std::vector<SoundexCode> first = SoundexVariants(segments->first, table, diag);
  std::vector<SoundexCode> second =
      SoundexVariants(segments->second, table, diag);
  for (const SoundexCode& a : first) {
    for (const SoundexCode& b : second) out.emplace_back(a, b);
  }
  return out;
}

}  // namespace namelink
