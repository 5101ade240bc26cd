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

#ifndef NAMELINK_ERROR_H_
#define NAMELINK_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace namelink {

// Every failure and warning the toolkit can report. Warnings travel through
// Diagnostics; errors are thrown as namelink::Error.
enum class ErrorCode {
  kNonLatinContent,
  kNonArabicContent,
  kEmptyName,
  kDanglingPrefix,
  kEmptyToken,
  kUnmappedCharacter,
  kRemoveMissingEntry,
  kSkippedPair,
  kUnknownBlockField,
  kNoResolvableTokens,
  kExhaustedRelaxation,
  kKeyMismatch,
  kEmptyMatrix,
  kZeroDenominator,
  kConfigError,
  kIoError,
  kDictionaryMissing,
  kMissingColumn,
  kEncodingError,
  kMalformedRow,
  kMalformedData,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct Diagnostic {
  ErrorCode code;
  std::string message;
};

// Collects non-fatal warnings. Functions accept a nullable pointer; passing
// nullptr discards the warnings.
class Diagnostics {
 public:
  void Warn(ErrorCode code, std::string message);

  const std::vector<Diagnostic>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  size_t Count(ErrorCode code) const;
  void Clear() { entries_.clear(); }

 private:
  std::vector<Diagnostic> entries_;
};

inline void Warn(Diagnostics* diag, ErrorCode code, std::string message) {
  if (diag != nullptr) diag->Warn(code, std::move(message));
}

}  // namespace namelink

#endif  // NAMELINK_ERROR_H_
