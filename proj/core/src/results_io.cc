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

#include "namelink/results_io.h"

#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>

#include "json.hpp"

namespace namelink {
namespace {

using nlohmann::json;

json ToJson(const MatchDecision& d) {
  json candidates = json::array();
  for (const Candidate& c : d.candidates) {
    candidates.push_back({{"dest_id", c.dest_id},
                          {"dest_name", c.dest_name},
                          {"wat", c.wat},
                          {"at", c.at},
                          {"edit_distance", c.edit_distance},
                          {"relax_level", c.relax_level}});
  }
  return {{"source_id", d.source_id},
          {"source_name", d.source_name},
          {"outcome", OutcomeName(d.outcome)},
          {"candidates", candidates}};
}

MatchDecision FromJson(const json& j) {
  MatchDecision d;
  d.source_id = j.at("source_id").get<std::string>();
  d.source_name = j.value("source_name", "");
  d.outcome = ParseOutcome(j.at("outcome").get<std::string>());
  for (const json& c : j.at("candidates")) {
    Candidate candidate;
    candidate.dest_id = c.at("dest_id").get<std::string>();
    candidate.dest_name = c.value("dest_name", "");
    candidate.wat = c.at("wat").get<double>();
    candidate.at = c.at("at").get<double>();
    candidate.edit_distance = c.at("edit_distance").get<size_t>();
    candidate.relax_level = c.at("relax_level").get<int>();
    d.candidates.push_back(std::move(candidate));
  }
  return d;
}

}  // namespace

void WriteResults(std::ostream& out,
                  const std::vector<MatchDecision>& decisions) {
  out << "[\n";
  for (size_t i = 0; i < decisions.size(); ++i) {
    out << ToJson(decisions[i]).dump();
    out << (i + 1 < decisions.size() ? ",\n" : "\n");
  }
  out << "]\n";
}

void WriteResultsFile(const std::string& path,
                      const std::vector<MatchDecision>& decisions) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  WriteResults(out, decisions);
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path);
}

std::vector<MatchDecision> ParseResults(std::istream& in) {
  try {
    json doc = json::parse(in);
    std::vector<MatchDecision> out;
    for (const json& j : doc) out.push_back(FromJson(j));
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedData,
                std::string("bad results file: ") + e.what());
  }
}

std::vector<MatchDecision> LoadResults(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  return ParseResults(in);
}

std::string DecisionToJson(const MatchDecision& decision) {
  return ToJson(decision).dump();
}

MatchDecision DecisionFromJson(const std::string& text) {
  try {
    return FromJson(json::parse(text));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedData,
                std::string("bad decision: ") + e.what());
  }
}

}  // namespace namelink
