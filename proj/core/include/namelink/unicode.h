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

#ifndef NAMELINK_UNICODE_H_
#define NAMELINK_UNICODE_H_

#include <string>
#include <string_view>

namespace namelink {

// Throws Error(kEncodingError) on malformed input.
std::u32string DecodeUtf8(std::string_view text);
std::string EncodeUtf8(std::u32string_view text);
std::string EncodeUtf8(char32_t cp);

bool IsValidUtf8(std::string_view text);

// First code point of a non-empty valid UTF-8 string, U+0000 otherwise.
char32_t FirstCodePoint(std::string_view text);

// Arabic blocks: base, supplement, presentation forms A and B.
bool InArabicBlock(char32_t cp);

}  // namespace namelink

#endif  // NAMELINK_UNICODE_H_
