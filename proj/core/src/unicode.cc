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

#include "namelink/unicode.h"

#include <unicode/utf8.h>

#include <cstdint>

#include "namelink/error.h"

namespace namelink {

std::u32string DecodeUtf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const int32_t length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 cp;
    const int32_t at = i;
    U8_NEXT(bytes, i, length, cp);
    if (cp < 0) {
      throw Error(ErrorCode::kEncodingError,
                  "invalid UTF-8 sequence at byte " + std::to_string(at));
    }
    out.push_back(static_cast<char32_t>(cp));
  }
  return out;
}

std::string EncodeUtf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size() * 2);
  for (char32_t cp : text) out += EncodeUtf8(cp);
  return out;
}

std::string EncodeUtf8(char32_t cp) {
  uint8_t buffer[U8_MAX_LENGTH];
  int32_t length = 0;
  UBool error = false;
  U8_APPEND(buffer, length, U8_MAX_LENGTH, static_cast<UChar32>(cp), error);
  if (error) {
    throw Error(ErrorCode::kEncodingError, "code point out of range");
  }
  return std::string(reinterpret_cast<const char*>(buffer),
                     static_cast<size_t>(length));
}

bool IsValidUtf8(std::string_view text) {
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const int32_t length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 cp;
    U8_NEXT(bytes, i, length, cp);
    if (cp < 0) return false;
  }
  return true;
}

char32_t FirstCodePoint(std::string_view text) {
  if (text.empty()) return U'\0';
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  int32_t i = 0;
  UChar32 cp;
  U8_NEXT(bytes, i, static_cast<int32_t>(text.size()), cp);
  return cp < 0 ? U'\0' : static_cast<char32_t>(cp);
}

bool InArabicBlock(char32_t cp) {
  return (cp >= 0x0600 && cp <= 0x06FF) || (cp >= 0x0750 && cp <= 0x077F) ||
         (cp >= 0x08A0 && cp <= 0x08FF) || (cp >= 0xFB50 && cp <= 0xFDFF) ||
         (cp >= 0xFE70 && cp <= 0xFEFC);
}

}  // namespace namelink
