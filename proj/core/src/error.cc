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

#include "namelink/error.h"

#include <algorithm>

namespace namelink {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonLatinContent: return "NonLatinContent";
    case ErrorCode::kNonArabicContent: return "NonArabicContent";
    case ErrorCode::kEmptyName: return "EmptyName";
    case ErrorCode::kDanglingPrefix: return "DanglingPrefix";
    case ErrorCode::kEmptyToken: return "EmptyToken";
    case ErrorCode::kUnmappedCharacter: return "UnmappedCharacter";
    case ErrorCode::kRemoveMissingEntry: return "RemoveMissingEntry";
    case ErrorCode::kSkippedPair: return "SkippedPair";
    case ErrorCode::kUnknownBlockField: return "UnknownBlockField";
    case ErrorCode::kNoResolvableTokens: return "NoResolvableTokens";
    case ErrorCode::kExhaustedRelaxation: return "ExhaustedRelaxation";
    case ErrorCode::kKeyMismatch: return "KeyMismatch";
    case ErrorCode::kEmptyMatrix: return "EmptyMatrix";
    case ErrorCode::kZeroDenominator: return "ZeroDenominator";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kDictionaryMissing: return "DictionaryMissing";
    case ErrorCode::kMissingColumn: return "MissingColumn";
    case ErrorCode::kEncodingError: return "EncodingError";
    case ErrorCode::kMalformedRow: return "MalformedRow";
    case ErrorCode::kMalformedData: return "MalformedData";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

void Diagnostics::Warn(ErrorCode code, std::string message) {
  entries_.push_back({code, std::move(message)});
}

size_t Diagnostics::Count(ErrorCode code) const {
  return static_cast<size_t>(
      std::count_if(entries_.begin(), entries_.end(),
                    [code](const Diagnostic& d) { return d.code == code; }));
}

}  // namespace namelink
