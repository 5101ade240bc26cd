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

#ifndef NAMELINK_TESTS_SUPPORT_FIXTURE_H_
#define NAMELINK_TESTS_SUPPORT_FIXTURE_H_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "namelink/config.h"
#include "namelink/match_engine.h"

namespace namelink::testing {

struct FixtureRow {
  std::string id;
  std::string name;
  std::string governorate;
};

enum class QueryKind {
  kExact,
  kMiddleDropped,  // the destination lacks one of the query's middle names
  kInitial,        // first name given as an initial letter
  kCommaReordered, // "Surname, First Middle"
};

// Arabic destination roster, transliterated source queries and the planted
// answer for every query. Initial-letter queries also have a trap record in
// the same block whose first name starts with the right Arabic letter but
// is romanized with a different one.
struct LinkageFixture {
  std::vector<FixtureRow> destination;
  std::vector<FixtureRow> source;
  std::map<std::string, std::string> truth;  // source id -> dest id
  std::map<std::string, QueryKind> kinds;
  std::map<std::string, std::string> traps;  // source id -> trap dest id
  // (arabic, latin) full names for building the dictionary.
  std::vector<std::pair<std::string, std::string>> training_pairs;
};

struct FixtureOptions {
  uint32_t seed = 20240501;
  size_t destinations = 200;
  size_t exact = 30;
  size_t middle_dropped = 10;
  size_t initial = 5;
  size_t comma_reordered = 5;
};

LinkageFixture GenerateLinkageFixture(const FixtureOptions& options = {});

// Writes destination.csv, source.csv, pairs.csv and truth.csv (expert
// label format) into `dir`.
void WriteLinkageFixture(const LinkageFixture& fixture,
                         const std::string& dir);

// Pipeline settings for a fixture written to `dir`: combined Soundex
// dictionary built from pairs.csv, governorate blocking, results, review
// queue and report written next to the inputs.
PipelineConfig FixtureConfig(const std::string& dir);

// How a set of decisions fares against the planted answers.
struct FixtureScore {
  size_t planted = 0;
  // The planted record is among the candidates, found at relax level <= 2.
  size_t recovered = 0;
  // The planted record is the single match.
  size_t matched = 0;
  size_t traps = 0;
  size_t traps_kept = 0;
  std::map<QueryKind, size_t> missed_by_kind;

  double RecoveryRate() const {
    return planted == 0 ? 0.0 : static_cast<double>(recovered) / planted;
  }
};

FixtureScore ScoreDecisions(const LinkageFixture& fixture,
                            const std::vector<MatchDecision>& decisions);

}  // namespace namelink::testing

#endif  // NAMELINK_TESTS_SUPPORT_FIXTURE_H_
