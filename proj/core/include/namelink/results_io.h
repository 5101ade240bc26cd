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

#ifndef NAMELINK_RESULTS_IO_H_
#define NAMELINK_RESULTS_IO_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "namelink/match_engine.h"

namespace namelink {

// A JSON array with one decision object per line:
// {"source_id", "source_name", "outcome", "candidates": [{"dest_id",
// "dest_name", "wat", "at", "edit_distance", "relax_level"}]}.
void WriteResults(std::ostream& out,
                  const std::vector<MatchDecision>& decisions);
void WriteResultsFile(const std::string& path,
                      const std::vector<MatchDecision>& decisions);

// Throws kMalformedData.
std::vector<MatchDecision> ParseResults(std::istream& in);
std::vector<MatchDecision> LoadResults(const std::string& path);

std::string DecisionToJson(const MatchDecision& decision);
MatchDecision DecisionFromJson(const std::string& text);

}  // namespace namelink

#endif  // NAMELINK_RESULTS_IO_H_
