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

#ifndef NAMELINK_BUILTIN_DATA_H_
#define NAMELINK_BUILTIN_DATA_H_

#include <string_view>

// Contents of the files under data/, embedded at build time.
namespace namelink::internal {

extern const std::string_view kBuiltinPrefixes;
extern const std::string_view kBuiltinEnglishCodes;
extern const std::string_view kBuiltinArabicCodes;
extern const std::string_view kBuiltinRomanization;

}  // namespace namelink::internal

#endif  // NAMELINK_BUILTIN_DATA_H_
