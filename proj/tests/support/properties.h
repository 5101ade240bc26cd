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

#ifndef NAMELINK_TESTS_SUPPORT_PROPERTIES_H_
#define NAMELINK_TESTS_SUPPORT_PROPERTIES_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace namelink::testing {

struct PropertyResult {
  std::string name;
  size_t cases = 0;
  size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
};

using Property = std::function<PropertyResult(uint32_t seed, size_t cases)>;

PropertyResult NormalizationIdempotence(uint32_t seed, size_t cases);
PropertyResult SoundexFormat(uint32_t seed, size_t cases);
PropertyResult SimilarityBounds(uint32_t seed, size_t cases);
PropertyResult LevenshteinAxioms(uint32_t seed, size_t cases);
PropertyResult WatMatchesExhaustive(uint32_t seed, size_t cases);
PropertyResult MatchPatternMatchesLike(uint32_t seed, size_t cases);
PropertyResult EtpapEmfiIdentity(uint32_t seed, size_t cases);
PropertyResult EffectivenessDiagonal(uint32_t seed, size_t cases);
PropertyResult EmfpEmfnRules(uint32_t seed, size_t cases);

struct NamedProperty {
  const char* name;
  Property run;
};

const std::vector<NamedProperty>& AllProperties();

}  // namespace namelink::testing

#endif  // NAMELINK_TESTS_SUPPORT_PROPERTIES_H_
