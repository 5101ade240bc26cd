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

#include "namelink/normalize.h"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/uscript.h>
#include <unicode/unistr.h>

#include <cctype>
#include <cstdio>
#include <string>

#include "namelink/error.h"
#include "namelink/unicode.h"

namespace namelink {
namespace {

constexpr char32_t kAlef = U'ا';
constexpr char32_t kWaw = U'و';
constexpr char32_t kYeh = U'ي';
constexpr char32_t kHeh = U'ه';
constexpr char32_t kHamza = U'ء';

std::u32string ApplyNormalizer(const icu::Normalizer2* normalizer,
                               std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString source = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  icu::UnicodeString result = normalizer->normalize(source, status);
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::kEncodingError, u_errorName(status));
  }
  std::string utf8;
  result.toUTF8String(utf8);
  return DecodeUtf8(utf8);
}

const icu::Normalizer2* Nfkc() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* n = icu::Normalizer2::getNFKCInstance(status);
  if (U_FAILURE(status)) throw Error(ErrorCode::kIoError, u_errorName(status));
  return n;
}

const icu::Normalizer2* Nfkd() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* n = icu::Normalizer2::getNFKDInstance(status);
  if (U_FAILURE(status)) throw Error(ErrorCode::kIoError, u_errorName(status));
  return n;
}

std::string CodePointLabel(char32_t cp) {
  char buffer[16];
  std::snprintf(buffer, sizeof(buffer), "U+%04X", static_cast<unsigned>(cp));
  return buffer;
}

bool IsLatinLetter(char32_t cp) {
  UErrorCode status = U_ZERO_ERROR;
  return u_isalpha(static_cast<UChar32>(cp)) &&
         uscript_getScript(static_cast<UChar32>(cp), &status) == USCRIPT_LATIN;
}

bool IsLatinSeparator(char32_t cp) {
  return cp == U'-' || cp == U'_' || cp == U',' || cp == U'.' || cp == U'/' ||
         (cp >= 0x2010 && cp <= 0x2015) ||
         u_isUWhiteSpace(static_cast<UChar32>(cp));
}

bool IsApostrophe(char32_t cp) {
  return cp == U'\'' || cp == U'`' || cp == 0x2018 || cp == 0x2019 ||
         cp == 0x02BC || cp == 0x02BB;
}

// Letters NFKD leaves intact but that have a conventional ASCII spelling.
std::string_view LatinSpecialFold(char32_t cp) {
  switch (cp) {
    case U'ß': return "ss";
    case U'æ': case U'Æ': return "ae";
    case U'ø': case U'Ø': return "o";
    case U'œ': case U'Œ': return "oe";
    case U'ð': case U'Ð': case U'đ': case U'Đ': return "d";
    case U'þ': case U'Þ': return "th";
    case U'ł': case U'Ł': return "l";
    case U'ı': return "i";
    default: return {};
  }
}

bool IsArabicMark(char32_t cp) {
  return (cp >= 0x064B && cp <= 0x065F) || cp == 0x0670 ||
         (cp >= 0x06D6 && cp <= 0x06ED) || (cp >= 0x08D3 && cp <= 0x08FF) ||
         cp == 0x0640;
}

bool IsArabicDigit(char32_t cp) {
  return (cp >= 0x0660 && cp <= 0x0669) || (cp >= 0x06F0 && cp <= 0x06F9);
}

bool IsArabicSeparator(char32_t cp) {
  return cp == U'،' || cp == U'؛' || cp == U'؟' ||
         cp == U'٫' || cp == U'٬' || cp == U'۔' ||
         cp == 0xFEFF || IsLatinSeparator(cp) ||
         u_ispunct(static_cast<UChar32>(cp));
}

bool IsLongVowel(char32_t cp) { return cp == kAlef || cp == kWaw || cp == kYeh; }

// Appends a separator unless the output is empty or already ends in one.
void AppendSpace(std::u32string& out) {
  if (!out.empty() && out.back() != U' ') out.push_back(U' ');
}

void TrimTrailingSpace(std::u32string& out) {
  while (!out.empty() && out.back() == U' ') out.pop_back();
}

// Removes a run of standalone hamza at the end of each word when the letter
// before the run is a long vowel.
std::u32string DropFinalHamza(const std::u32string& text) {
  std::u32string out;
  out.reserve(text.size());
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(U' ', start);
    if (end == std::u32string::npos) end = text.size();
    std::u32string word = text.substr(start, end - start);
    size_t keep = word.size();
    while (keep > 0 && word[keep - 1] == kHamza) --keep;
    if (keep < word.size() && keep > 0 && IsLongVowel(word[keep - 1])) {
      word.resize(keep);
    }
    if (!word.empty()) {
      if (!out.empty()) out.push_back(U' ');
      out += word;
    }
    start = end + 1;
  }
  return out;
}

}  // namespace

std::string_view ScriptName(Script script) {
  switch (script) {
    case Script::kArabic: return "arabic";
    case Script::kLatin: return "latin";
    case Script::kMixed: return "mixed";
  }
  return "mixed";
}

Script DetectScript(std::string_view text) {
  bool arabic = false;
  bool latin = false;
  for (char32_t cp : DecodeUtf8(text)) {
    if (InArabicBlock(cp)) arabic = true;
    if (IsLatinLetter(cp)) latin = true;
  }
  if (arabic && !latin) return Script::kArabic;
  if (latin && !arabic) return Script::kLatin;
  return Script::kMixed;
}

RawName RawName::FromText(std::string text) {
  RawName raw;
  raw.script = DetectScript(text);
  raw.text = std::move(text);
  return raw;
}

NormalizedName NormalizeLatin(const RawName& raw) {
  std::u32string out;
  std::optional<size_t> surname_words;
  size_t words = 0;
  bool in_word = false;
  for (char32_t cp : ApplyNormalizer(Nfkd(), raw.text)) {
    if (cp < 0x80 && std::isalpha(static_cast<int>(cp))) {
      out.push_back(static_cast<char32_t>(std::tolower(static_cast<int>(cp))));
      if (!in_word) ++words;
      in_word = true;
      continue;
    }
    if (std::string_view fold = LatinSpecialFold(cp); !fold.empty()) {
      for (char c : fold) out.push_back(static_cast<char32_t>(c));
      if (!in_word) ++words;
      in_word = true;
      continue;
    }
    if (u_charType(static_cast<UChar32>(cp)) == U_NON_SPACING_MARK ||
        u_isdigit(static_cast<UChar32>(cp)) || IsApostrophe(cp)) {
      continue;
    }
    if (IsLatinSeparator(cp)) {
      if (cp == U',' && !surname_words && words > 0) surname_words = words;
      AppendSpace(out);
      in_word = false;
      continue;
    }
    throw Error(ErrorCode::kNonLatinContent,
                "unexpected character " + CodePointLabel(cp) + " in '" +
                    raw.text + "'");
  }
  TrimTrailingSpace(out);
  if (out.empty()) {
    throw Error(ErrorCode::kEmptyName, "no letters in '" + raw.text + "'");
  }
  NormalizedName result;
  result.text = EncodeUtf8(out);
  result.script = Script::kLatin;
  if (surname_words && *surname_words < words) {
    result.surname_words = surname_words;
  }
  return result;
}

NormalizedName NormalizeArabic(const RawName& raw,
                               const NormalizeOptions& options) {
  std::u32string out;
  for (char32_t cp : ApplyNormalizer(Nfkc(), raw.text)) {
    switch (cp) {
      case U'آ':  // alef with madda
      case U'أ':  // alef with hamza above
      case U'إ':  // alef with hamza below
      case U'ٱ':  // alef wasla
        out.push_back(kAlef);
        continue;
      case U'ؤ':  // waw with hamza
        out.push_back(options.waw_hamza_to_alef ? kAlef : kWaw);
        continue;
      case U'ى':  // alef maksura
      case U'ئ':  // yeh with hamza
      case U'ی':  // farsi yeh
        out.push_back(kYeh);
        continue;
      case U'ة':  // teh marbuta
      case U'ۀ':
        out.push_back(kHeh);
        continue;
      case U'ک':  // keheh
        out.push_back(U'ك');
        continue;
      default:
        break;
    }
    if (IsArabicMark(cp) || IsArabicDigit(cp) ||
        u_isdigit(static_cast<UChar32>(cp)) ||
        u_charType(static_cast<UChar32>(cp)) == U_NON_SPACING_MARK) {
      continue;
    }
    if (IsLatinLetter(cp)) {
      throw Error(ErrorCode::kNonArabicContent,
                  "Latin letter in Arabic name '" + raw.text + "'");
    }
    if (IsArabicSeparator(cp)) {
      AppendSpace(out);
      continue;
    }
    if (InArabicBlock(cp) && u_isalpha(static_cast<UChar32>(cp))) {
      out.push_back(cp);
      continue;
    }
    throw Error(ErrorCode::kNonArabicContent,
                "unexpected character " + CodePointLabel(cp) + " in '" +
                    raw.text + "'");
  }
  TrimTrailingSpace(out);
  if (options.drop_final_hamza) out = DropFinalHamza(out);
  if (out.empty()) {
    throw Error(ErrorCode::kEmptyName, "no letters in '" + raw.text + "'");
  }
  NormalizedName result;
  result.text = EncodeUtf8(out);
  result.script = Script::kArabic;
  return result;
}

NormalizedName Normalize(const RawName& raw, const NormalizeOptions& options) {
  switch (raw.script) {
    case Script::kLatin:
      return NormalizeLatin(raw);
    case Script::kArabic:
      return NormalizeArabic(raw, options);
    case Script::kMixed:
      break;
  }
  for (char32_t cp : DecodeUtf8(raw.text)) {
    if (IsLatinLetter(cp)) {
      throw Error(ErrorCode::kNonArabicContent,
                  "mixed-script name '" + raw.text + "'");
    }
  }
  throw Error(ErrorCode::kEmptyName, "no letters in '" + raw.text + "'");
}

}  // namespace namelink
