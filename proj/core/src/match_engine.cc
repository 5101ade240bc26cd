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

#include "namelink/match_engine.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <mutex>
#include <thread>

#include "namelink/similarity.h"
#include "namelink/unicode.h"

namespace namelink {
namespace {

enum class StepKind { kFull, kDropMiddle, kDropLast, kFuzzy };

std::vector<StepKind> StepsFor(RelaxOrder order) {
  if (order == RelaxOrder::kLastNameFirst) {
    return {StepKind::kFull, StepKind::kDropLast, StepKind::kDropMiddle,
            StepKind::kFuzzy};
  }
  return {StepKind::kFull, StepKind::kDropMiddle, StepKind::kDropLast,
          StepKind::kFuzzy};
}

bool StartsWith(std::string_view text, std::string_view prefix) {
  return text.size() >= prefix.size() &&
         text.compare(0, prefix.size(), prefix) == 0;
}

bool IsInitial(std::string_view token) {
  return DecodeUtf8(token).size() == 1;
}

std::string Join(const std::vector<std::string>& tokens) {
  std::string out;
  for (const std::string& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

// Adds the first-name typo tolerance used by the last relaxation step.
TokenAlternatives WithFuzzy(TokenAlternatives alt, Script source_script,
                            Script dest_script, const Dictionary& dict,
                            size_t max_distance) {
  if (alt.initial != 0 || IsInitial(alt.source_token)) return alt;
  if (source_script == dest_script) {
    alt.near.insert(alt.source_token);
    alt.near_distance = max_distance;
    return alt;
  }
  const auto& keys = source_script == Script::kLatin ? dict.latin_index()
                                                     : dict.arabic_index();
  for (const auto& [key, counterparts] : keys) {
    if (IsInitial(key)) continue;
    if (Levenshtein(key, alt.source_token) <= max_distance) {
      alt.exact.insert(counterparts.begin(), counterparts.end());
    }
  }
  return alt;
}

// The destination-script form each source token is scored as: the
// alternative closest to some destination token, ties to the smallest.
std::vector<std::string> Representatives(
    const std::vector<TokenAlternatives>& alternatives,
    const std::vector<std::string>& dest_tokens, bool same_script) {
  std::vector<std::string> out;
  out.reserve(alternatives.size());
  for (const TokenAlternatives& alt : alternatives) {
    if (same_script) {
      out.push_back(alt.source_token);
      continue;
    }
    std::set<std::string> options = alt.exact;
    options.insert(alt.prefixes.begin(), alt.prefixes.end());
    if (options.empty()) {
      out.push_back(alt.source_token);
      continue;
    }
    const std::string* best = nullptr;
    double best_sim = -1.0;
    for (const std::string& option : options) {
      double s = 0.0;
      for (const std::string& d : dest_tokens) s = std::max(s, Sim(option, d));
      if (s > best_sim) {
        best_sim = s;
        best = &option;
      }
    }
    out.push_back(*best);
  }
  return out;
}

size_t WorkerCount(size_t requested, size_t jobs) {
  size_t n = requested;
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return std::max<size_t>(1, std::min(n, jobs));
}

const std::vector<size_t> kNoRecords;

}  // namespace

std::string_view OutcomeName(Outcome outcome) {
  switch (outcome) {
    case Outcome::kMatch: return "match";
    case Outcome::kNonMatch: return "non_match";
    case Outcome::kPossible: return "possible";
  }
  return "non_match";
}

Outcome ParseOutcome(std::string_view text) {
  for (Outcome o : {Outcome::kMatch, Outcome::kNonMatch, Outcome::kPossible}) {
    if (OutcomeName(o) == text) return o;
  }
  throw Error(ErrorCode::kMalformedData,
              "unknown outcome '" + std::string(text) + "'");
}

std::string_view RelaxOrderName(RelaxOrder order) {
  return order == RelaxOrder::kLastNameFirst ? "last_name_first"
                                             : "paper_order";
}

RelaxOrder ParseRelaxOrder(std::string_view text) {
  if (text == "paper_order") return RelaxOrder::kPaperOrder;
  if (text == "last_name_first") return RelaxOrder::kLastNameFirst;
  throw Error(ErrorCode::kConfigError,
              "unknown relax order '" + std::string(text) + "'");
}

size_t MatchDecision::Multiplicity() const {
  switch (outcome) {
    case Outcome::kMatch: return 1;
    case Outcome::kPossible: return candidates.size();
    case Outcome::kNonMatch: return 0;
  }
  return 0;
}

std::set<std::string> MatchDecision::DestIds() const {
  std::set<std::string> ids;
  if (outcome == Outcome::kNonMatch) return ids;
  for (const Candidate& c : candidates) ids.insert(c.dest_id);
  return ids;
}

BlockIndex::BlockIndex(const std::vector<DatasetRecord>& records,
                       std::vector<std::string> fields)
    : fields_(std::move(fields)) {
  for (size_t i = 0; i < records.size(); ++i) {
    buckets_[KeyOf(records[i])].push_back(i);
  }
}

std::string BlockIndex::KeyOf(const DatasetRecord& record) const {
  std::string key;
  for (const std::string& field : fields_) {
    auto it = record.fields.find(field);
    if (it == record.fields.end()) {
      throw Error(ErrorCode::kUnknownBlockField,
                  "record '" + record.id + "' has no field '" + field + "'");
    }
    key += it->second;
    key += '\x1f';
  }
  return key;
}

const std::vector<size_t>& BlockIndex::Lookup(
    const DatasetRecord& record) const {
  auto it = buckets_.find(KeyOf(record));
  return it == buckets_.end() ? kNoRecords : it->second;
}

std::vector<std::pair<size_t, size_t>> BlockPairs(
    const std::vector<DatasetRecord>& source,
    const std::vector<DatasetRecord>& destination,
    const std::vector<std::string>& fields) {
  BlockIndex index(destination, fields);
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t s = 0; s < source.size(); ++s) {
    for (size_t d : index.Lookup(source[s])) pairs.emplace_back(s, d);
  }
  return pairs;
}

bool TokenAlternatives::Accepts(std::string_view dest_token) const {
  if (exact.find(std::string(dest_token)) != exact.end()) return true;
  for (const std::string& p : prefixes) {
    if (StartsWith(dest_token, p)) return true;
  }
  for (const std::string& n : near) {
    if (Levenshtein(dest_token, n) <= near_distance) return true;
  }
  return false;
}

bool SearchPattern::Resolvable() const {
  return !tokens.empty() &&
         std::none_of(tokens.begin(), tokens.end(),
                      [](const TokenAlternatives& t) { return t.empty(); });
}

TokenAlternatives ResolveToken(const NameToken& token, Script source_script,
                               Script dest_script, const Dictionary& dict,
                               const CodeTable& codes) {
  TokenAlternatives alt;
  alt.source_token = token.canonical;
  const bool initial = IsInitial(token.canonical);
  if (source_script == dest_script) {
    if (initial) {
      alt.prefixes.insert(token.canonical);
      if (source_script == Script::kLatin) alt.initial = token.canonical[0];
    } else {
      alt.exact.insert(token.canonical);
    }
    return alt;
  }
  if (source_script == Script::kLatin) {
    if (initial) {
      alt.initial = static_cast<char>(
          std::tolower(static_cast<unsigned char>(token.canonical[0])));
      for (char32_t letter : codes.ArabicInitialsFor(alt.initial)) {
        alt.prefixes.insert(EncodeUtf8(letter));
      }
    } else {
      alt.exact = dict.LookupLatin(token.canonical, codes);
    }
    return alt;
  }
  if (initial) {
    for (char c : codes.Romanizations(FirstCodePoint(token.canonical))) {
      alt.prefixes.insert(std::string(
          1, static_cast<char>(std::tolower(static_cast<unsigned char>(c)))));
    }
  } else {
    alt.exact = dict.LookupArabic(token.canonical);
  }
  return alt;
}

SearchPattern BuildPattern(const ParsedName& source, Script dest_script,
                           const Dictionary& dict, const CodeTable& codes,
                           int relax_level) {
  SearchPattern pattern;
  pattern.relax_level = relax_level;
  bool any = false;
  for (const NameToken& token : source.tokens) {
    pattern.tokens.push_back(ResolveToken(token, source.original.script,
                                          dest_script, dict, codes));
    any = any || !pattern.tokens.back().empty();
  }
  if (!any) {
    throw Error(ErrorCode::kNoResolvableTokens,
                "no token of '" + source.CanonicalText() + "' resolves");
  }
  return pattern;
}

std::optional<std::vector<size_t>> FindSubsequence(
    const SearchPattern& pattern, const std::vector<std::string>& dest_tokens,
    const TokenCheck& check) {
  if (pattern.tokens.empty()) return std::nullopt;
  std::vector<size_t> positions;
  size_t i = 0;
  for (const TokenAlternatives& alt : pattern.tokens) {
    while (i < dest_tokens.size() &&
           !(alt.Accepts(dest_tokens[i]) &&
             (!check || check(alt, dest_tokens[i])))) {
      ++i;
    }
    if (i == dest_tokens.size()) return std::nullopt;
    positions.push_back(i++);
  }
  return positions;
}

bool MatchPattern(const SearchPattern& pattern, const ParsedName& dest) {
  return FindSubsequence(pattern, dest.Canonicals()).has_value();
}

bool VerifyReverse(const TokenAlternatives& alternatives,
                   std::string_view dest_token, const Dictionary& dict) {
  if (alternatives.initial == 0) return true;
  std::set<std::string> latins = dict.LookupArabic(dest_token);
  if (latins.empty()) return true;
  return std::any_of(latins.begin(), latins.end(), [&](const std::string& l) {
    return !l.empty() && l[0] == alternatives.initial;
  });
}

std::vector<std::vector<size_t>> RelaxSubsets(size_t token_count, int level) {
  std::vector<std::vector<size_t>> out;
  if (level == 1 && token_count >= 3) {
    for (size_t drop = 1; drop + 1 < token_count; ++drop) {
      std::vector<size_t> keep;
      for (size_t i = 0; i < token_count; ++i) {
        if (i != drop) keep.push_back(i);
      }
      out.push_back(std::move(keep));
    }
  } else if (level == 2 && token_count >= 2) {
    std::vector<size_t> keep(token_count - 1);
    for (size_t i = 0; i < keep.size(); ++i) keep[i] = i;
    out.push_back(std::move(keep));
  }
  return out;
}

std::vector<ParsedName> Relax(const ParsedName& source, int level) {
  std::vector<ParsedName> out;
  for (const std::vector<size_t>& keep :
       RelaxSubsets(source.tokens.size(), level)) {
    ParsedName reduced;
    reduced.original = source.original;
    for (size_t i : keep) reduced.tokens.push_back(source.tokens[i]);
    out.push_back(std::move(reduced));
  }
  return out;
}

MatchDecision Classify(std::string source_id, std::string source_name,
                       std::vector<Candidate> candidates,
                       const MatchOptions& options) {
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.wat != b.wat) return a.wat > b.wat;
              if (a.edit_distance != b.edit_distance) {
                return a.edit_distance < b.edit_distance;
              }
              return a.dest_id < b.dest_id;
            });
  MatchDecision decision;
  decision.source_id = std::move(source_id);
  decision.source_name = std::move(source_name);
  if (candidates.size() == 1 &&
      candidates[0].wat >= options.match_threshold) {
    decision.outcome = Outcome::kMatch;
    decision.candidates = std::move(candidates);
    return decision;
  }
  std::erase_if(candidates,
                [&](const Candidate& c) { return c.wat < options.floor; });
  decision.outcome =
      candidates.empty() ? Outcome::kNonMatch : Outcome::kPossible;
  decision.candidates = std::move(candidates);
  return decision;
}

MatchEngine::MatchEngine(const NameAnalyzer& analyzer, const Dictionary& dict,
                         MatchOptions options)
    : analyzer_(analyzer), dict_(dict), options_(options) {}

void MatchEngine::Index(const Dataset& destination,
                        std::vector<std::string> block_fields,
                        Diagnostics* diag) {
  for (const std::string& field : block_fields) {
    if (std::find(destination.columns.begin(), destination.columns.end(),
                  field) == destination.columns.end()) {
      throw Error(ErrorCode::kUnknownBlockField,
                  "destination has no column '" + field + "'");
    }
  }
  records_.clear();
  dest_.clear();
  for (const DatasetRecord& record : destination.records) {
    try {
      ParsedName parsed = analyzer_.Analyze(record.name, destination.order, diag);
      DestEntry entry;
      entry.id = record.id;
      entry.name = record.name;
      entry.script = parsed.original.script;
      entry.tokens = parsed.Canonicals();
      entry.text = Join(entry.tokens);
      dest_.push_back(std::move(entry));
      records_.push_back(record);
    } catch (const Error& e) {
      Warn(diag, ErrorCode::kMalformedRow,
           "destination '" + record.id + "' skipped: " + e.what());
    }
  }
  index_ = BlockIndex(records_, std::move(block_fields));
}

std::vector<Candidate> MatchEngine::Search(const ParsedName& source,
                                           const std::vector<size_t>& block,
                                           Diagnostics* diag) const {
  const Script source_script = source.original.script;
  const size_t n = source.tokens.size();
  const CodeTable& codes = analyzer_.codes();

  std::map<Script, std::vector<TokenAlternatives>> resolved;
  std::map<Script, TokenAlternatives> fuzzy_first;
  auto alternatives_for = [&](Script script) -> std::vector<TokenAlternatives>& {
    auto it = resolved.find(script);
    if (it != resolved.end()) return it->second;
    std::vector<TokenAlternatives> alts;
    for (const NameToken& token : source.tokens) {
      alts.push_back(ResolveToken(token, source_script, script, dict_, codes));
    }
    fuzzy_first.emplace(script, WithFuzzy(alts[0], source_script, script, dict_,
                                          options_.max_edit_distance));
    return resolved.emplace(script, std::move(alts)).first->second;
  };

  bool any_resolved = false;
  for (size_t d : block) {
    for (const TokenAlternatives& alt : alternatives_for(dest_[d].script)) {
      any_resolved = any_resolved || !alt.empty();
    }
  }
  if (!block.empty() && !any_resolved) {
    Warn(diag, ErrorCode::kNoResolvableTokens,
         "no token of '" + source.CanonicalText() + "' resolves");
    return {};
  }

  TokenCheck verify;
  if (options_.verify_reverse) {
    verify = [this](const TokenAlternatives& alt, std::string_view token) {
      return VerifyReverse(alt, token, dict_);
    };
  }

  const std::vector<StepKind> steps = StepsFor(options_.relax_order);
  std::set<std::vector<size_t>> subsets;
  bool fuzzy = false;
  for (size_t step = 0; step < steps.size(); ++step) {
    size_t before = subsets.size();
    switch (steps[step]) {
      case StepKind::kFull: {
        std::vector<size_t> all(n);
        for (size_t i = 0; i < n; ++i) all[i] = i;
        subsets.insert(all);
        break;
      }
      case StepKind::kDropMiddle:
        for (auto& s : RelaxSubsets(n, 1)) subsets.insert(std::move(s));
        break;
      case StepKind::kDropLast:
        for (auto& s : RelaxSubsets(n, 2)) subsets.insert(std::move(s));
        break;
      case StepKind::kFuzzy:
        fuzzy = true;
        break;
    }
    if (steps[step] != StepKind::kFuzzy && subsets.size() == before) continue;

    std::vector<Candidate> found;
    for (size_t d : block) {
      const DestEntry& dest = dest_[d];
      const std::vector<TokenAlternatives>& alts =
          alternatives_for(dest.script);
      const TokenCheck& check =
          dest.script == Script::kArabic ? verify : TokenCheck();
      std::vector<TokenAlternatives> scored = alts;
      if (fuzzy) scored[0] = fuzzy_first.at(dest.script);
      bool matched = false;
      for (const std::vector<size_t>& keep : subsets) {
        SearchPattern pattern;
        pattern.relax_level = static_cast<int>(step);
        for (size_t i : keep) pattern.tokens.push_back(scored[i]);
        if (!pattern.Resolvable()) continue;
        if (FindSubsequence(pattern, dest.tokens, check)) {
          matched = true;
          break;
        }
      }
      if (!matched) continue;
      std::vector<std::string> reps = Representatives(
          scored, dest.tokens, dest.script == source_script);
      Candidate c;
      c.dest_id = dest.id;
      c.dest_name = dest.name;
      c.wat = WeightedAtomicToken(reps, dest.tokens);
      c.at = AtomicToken(reps, dest.tokens);
      c.edit_distance = Levenshtein(Join(reps), dest.text);
      c.relax_level = static_cast<int>(step);
      found.push_back(std::move(c));
    }
    if (!found.empty()) return found;
  }
  return {};
}

MatchDecision MatchEngine::MatchRecord(const DatasetRecord& source,
                                       NameOrder order,
                                       Diagnostics* diag) const {
  ParsedName parsed;
  try {
    parsed = analyzer_.Analyze(source.name, order, diag);
  } catch (const Error& e) {
    Warn(diag, e.code(), "source '" + source.id + "': " + e.what());
    return Classify(source.id, source.name, {}, options_);
  }
  std::vector<Candidate> candidates =
      Search(parsed, index_.Lookup(source), diag);
  return Classify(source.id, source.name, std::move(candidates), options_);
}

std::vector<MatchDecision> MatchEngine::MatchAll(const Dataset& source,
                                                 Diagnostics* diag) const {
  for (const std::string& field : index_.fields()) {
    if (std::find(source.columns.begin(), source.columns.end(), field) ==
        source.columns.end()) {
      throw Error(ErrorCode::kUnknownBlockField,
                  "source has no column '" + field + "'");
    }
  }
  const size_t count = source.records.size();
  std::vector<MatchDecision> decisions(count);
  std::vector<Diagnostics> local(count);
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (size_t i = next++; i < count; i = next++) {
      try {
        decisions[i] =
            MatchRecord(source.records[i], source.order, &local[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> workers;
    const size_t n = WorkerCount(options_.threads, count);
    for (size_t t = 1; t < n; ++t) workers.emplace_back(work);
    work();
  }
  if (failure) std::rethrow_exception(failure);
  if (diag != nullptr) {
    for (const Diagnostics& d : local) {
      for (const Diagnostic& entry : d.entries()) {
        diag->Warn(entry.code, entry.message);
      }
    }
  }
  std::stable_sort(decisions.begin(), decisions.end(),
                   [](const MatchDecision& a, const MatchDecision& b) {
                     return a.source_id < b.source_id;
                   });
  return decisions;
}

}  // namespace namelink
