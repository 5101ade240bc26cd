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

#ifndef NAMELINK_MATCH_ENGINE_H_
#define NAMELINK_MATCH_ENGINE_H_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "namelink/analyzer.h"
#include "namelink/dataset_io.h"
#include "namelink/dictionary.h"
#include "namelink/error.h"
#include "namelink/parse.h"

namespace namelink {

enum class Outcome { kMatch, kNonMatch, kPossible };

std::string_view OutcomeName(Outcome outcome);
// Throws kMalformedData.
Outcome ParseOutcome(std::string_view text);

enum class RelaxOrder {
  // Drop a middle name, then the last name, then fuzzy first name.
  kPaperOrder,
  // Drop the last name before trying middle names.
  kLastNameFirst,
};

std::string_view RelaxOrderName(RelaxOrder order);
// Throws kConfigError.
RelaxOrder ParseRelaxOrder(std::string_view text);

struct MatchOptions {
  double match_threshold = 0.85;
  double floor = 0.4;
  size_t max_edit_distance = 2;
  RelaxOrder relax_order = RelaxOrder::kPaperOrder;
  bool verify_reverse = true;
  // 0 uses the hardware concurrency.
  size_t threads = 0;
};

struct Candidate {
  std::string dest_id;
  std::string dest_name;
  double wat = 0.0;
  double at = 0.0;
  size_t edit_distance = 0;
  int relax_level = 0;

  bool operator==(const Candidate&) const = default;
};

struct MatchDecision {
  std::string source_id;
  std::string source_name;
  Outcome outcome = Outcome::kNonMatch;
  std::vector<Candidate> candidates;

  // 1 for a match, the list length for a possible match, 0 otherwise.
  size_t Multiplicity() const;
  std::set<std::string> DestIds() const;

  bool operator==(const MatchDecision&) const = default;
};

// Groups destination records by the values of the block fields. With no
// fields every record falls in one block.
class BlockIndex {
 public:
  BlockIndex() = default;
  // Throws kUnknownBlockField when a record lacks one of `fields`.
  BlockIndex(const std::vector<DatasetRecord>& records,
             std::vector<std::string> fields);

  // Throws kUnknownBlockField.
  std::string KeyOf(const DatasetRecord& record) const;
  // Indexes of the records sharing `record`'s block values.
  const std::vector<size_t>& Lookup(const DatasetRecord& record) const;

  const std::vector<std::string>& fields() const { return fields_; }

 private:
  std::vector<std::string> fields_;
  std::map<std::string, std::vector<size_t>> buckets_;
};

// Every (source index, destination index) pair that agrees on all fields.
std::vector<std::pair<size_t, size_t>> BlockPairs(
    const std::vector<DatasetRecord>& source,
    const std::vector<DatasetRecord>& destination,
    const std::vector<std::string>& fields);

// The destination tokens one source token may stand for.
struct TokenAlternatives {
  std::string source_token;
  std::set<std::string> exact;
  // Accepted token starts: a source initial "a" accepts any Arabic token
  // starting with a letter romanized as A.
  std::set<std::string> prefixes;
  // Accepted within `near_distance` edits of any of these.
  std::set<std::string> near;
  size_t near_distance = 0;
  // Lowercase Latin letter when the source token is an initial.
  char initial = 0;

  bool Accepts(std::string_view dest_token) const;
  bool empty() const {
    return exact.empty() && prefixes.empty() && near.empty();
  }
};

// Ordered wildcard query: tok1 % tok2 % ... where each % spans zero or more
// destination tokens.
struct SearchPattern {
  std::vector<TokenAlternatives> tokens;
  int relax_level = 0;

  // False when some position has no alternatives and can never match.
  bool Resolvable() const;
};

TokenAlternatives ResolveToken(const NameToken& token, Script source_script,
                               Script dest_script, const Dictionary& dict,
                               const CodeTable& codes = CodeTable::Builtin());

// One alternatives set per source token. Throws kNoResolvableTokens when no
// token resolves.
SearchPattern BuildPattern(const ParsedName& source, Script dest_script,
                           const Dictionary& dict,
                           const CodeTable& codes = CodeTable::Builtin(),
                           int relax_level = 0);

// Extra acceptance test applied to each (alternatives, destination token)
// pairing considered by the search.
using TokenCheck =
    std::function<bool(const TokenAlternatives&, std::string_view)>;

// Leftmost positions i1 < i2 < ... with dest_tokens[ij] accepted by
// pattern.tokens[j], or nullopt. An empty pattern never matches.
std::optional<std::vector<size_t>> FindSubsequence(
    const SearchPattern& pattern, const std::vector<std::string>& dest_tokens,
    const TokenCheck& check = nullptr);

bool MatchPattern(const SearchPattern& pattern, const ParsedName& dest);

// Reverse dictionary check for a Latin initial matched to an Arabic token:
// rejects the pairing when the dictionary knows the token and none of its
// Latin forms starts with the initial. Other pairings pass.
bool VerifyReverse(const TokenAlternatives& alternatives,
                   std::string_view dest_token, const Dictionary& dict);

// Reduced token lists tried when the full name finds nothing. Level 1 drops
// one middle token (first and last kept); level 2 drops the last token.
// Other levels, and names too short to reduce, give no queries.
std::vector<std::vector<size_t>> RelaxSubsets(size_t token_count, int level);
std::vector<ParsedName> Relax(const ParsedName& source, int level);

// Sorts by WAT descending, then edit distance, then destination id, and
// decides: a single candidate at or above the match threshold is a match;
// otherwise candidates under the floor are dropped and the rest are a
// possible match. Nothing left is a non-match.
MatchDecision Classify(std::string source_id, std::string source_name,
                       std::vector<Candidate> candidates,
                       const MatchOptions& options);

// Blocks, searches, verifies, scores, classifies and relaxes. Thread-safe
// for concurrent MatchRecord calls once Index has returned. `analyzer` and
// `dict` must outlive the engine.
class MatchEngine {
 public:
  MatchEngine(const NameAnalyzer& analyzer, const Dictionary& dict,
              MatchOptions options = {});

  // Destination records whose names fail to analyze are skipped with a
  // kMalformedRow warning. Throws kUnknownBlockField.
  void Index(const Dataset& destination, std::vector<std::string> block_fields,
             Diagnostics* diag = nullptr);

  MatchDecision MatchRecord(const DatasetRecord& source, NameOrder order,
                            Diagnostics* diag = nullptr) const;

  // Matches every record in parallel; the result is sorted by source id.
  // Throws kUnknownBlockField when the source lacks a block column.
  std::vector<MatchDecision> MatchAll(const Dataset& source,
                                      Diagnostics* diag = nullptr) const;

  const MatchOptions& options() const { return options_; }

 private:
  struct DestEntry {
    std::string id;
    std::string name;
    Script script = Script::kArabic;
    std::vector<std::string> tokens;  // canonical
    std::string text;                 // canonical tokens joined by spaces
  };

  std::vector<Candidate> Search(const ParsedName& source,
                                const std::vector<size_t>& block,
                                Diagnostics* diag) const;

  const NameAnalyzer& analyzer_;
  const Dictionary& dict_;
  MatchOptions options_;
  std::vector<DatasetRecord> records_;
  std::vector<DestEntry> dest_;
  BlockIndex index_;
};

}  // namespace namelink

#endif  // NAMELINK_MATCH_ENGINE_H_
