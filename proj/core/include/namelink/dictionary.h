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

#ifndef NAMELINK_DICTIONARY_H_
#define NAMELINK_DICTIONARY_H_

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "namelink/analyzer.h"
#include "namelink/error.h"
#include "namelink/parse.h"
#include "namelink/phonetic.h"

namespace namelink {

enum class Provenance {
  kSourceExtracted,
  kSoundexJoin,
  kCombinedSoundexJoin,
  kExpertVerified,
};

std::string_view ProvenanceName(Provenance provenance);
// Throws kMalformedData.
Provenance ParseProvenance(std::string_view text);

struct DictionaryEntry {
  std::string arabic;  // canonical Arabic token
  std::string latin;   // canonical Latin token
  CombinedSoundexCode arabic_code;
  CombinedSoundexCode latin_code;
  Provenance provenance = Provenance::kSourceExtracted;
  bool verified = false;

  bool operator==(const DictionaryEntry&) const = default;
};

// Token-level Arabic <-> Latin map. Both directions may be one-to-many.
class Dictionary {
 public:
  using Key = std::pair<std::string, std::string>;  // (arabic, latin)

  // Adds or replaces the entry for (arabic, latin). Returns false when an
  // entry was replaced.
  bool Insert(DictionaryEntry entry);
  // Returns false when the pair was absent.
  bool Remove(std::string_view arabic, std::string_view latin);

  const DictionaryEntry* Find(std::string_view arabic,
                              std::string_view latin) const;
  bool empty() const { return entries_.empty(); }
  size_t size() const { return entries_.size(); }
  const std::map<Key, DictionaryEntry>& entries() const { return entries_; }

  // Arabic forms of a Latin token. A single letter is treated as an initial
  // and returns every Arabic key whose first letter may be romanized as it.
  std::set<std::string> LookupLatin(
      std::string_view latin,
      const CodeTable& codes = CodeTable::Builtin()) const;
  std::set<std::string> LookupArabic(std::string_view arabic) const;

  const std::map<std::string, std::set<std::string>, std::less<>>&
  arabic_index() const {
    return arabic_index_;
  }
  const std::map<std::string, std::set<std::string>, std::less<>>&
  latin_index() const {
    return latin_index_;
  }

  // TSV, one entry per line sorted by (arabic, latin):
  // arabic, latin, arabic_code, latin_code, provenance, verified.
  void Save(std::ostream& out) const;
  void SaveFile(const std::string& path) const;
  // Blank lines and '#' comments are skipped. Throws kMalformedRow.
  static Dictionary Load(std::istream& in);
  static Dictionary LoadFile(const std::string& path);

 private:
  std::map<Key, DictionaryEntry> entries_;
  std::map<std::string, std::set<std::string>, std::less<>> arabic_index_;
  std::map<std::string, std::set<std::string>, std::less<>> latin_index_;
};

// An Arabic full name and its Latin transliteration, both analyzed.
struct NamePair {
  ParsedName arabic;
  ParsedName latin;
};

// Analyzes raw (arabic, latin) pairs. Pairs whose names fail to analyze or
// have the wrong script are skipped and reported as kSkippedPair.
std::vector<NamePair> AnalyzePairs(
    const std::vector<std::pair<std::string, std::string>>& raw,
    const NameAnalyzer& analyzer, NameOrder latin_order,
    Diagnostics* diag = nullptr);

// Pairs the k-th Arabic token with the k-th Latin token. Pairs with unequal
// token counts are skipped (kSkippedPair); single-letter Latin tokens are
// not stored.
Dictionary BuildSourceExtracted(const std::vector<NamePair>& pairs,
                                const CodeTable& codes = CodeTable::Builtin(),
                                Diagnostics* diag = nullptr);

// As BuildSourceExtracted, keeping only token pairs whose plain Soundex
// codes agree for some first-letter variant of the Arabic token.
Dictionary BuildSoundexJoin(const std::vector<NamePair>& pairs,
                            const CodeTable& codes = CodeTable::Builtin(),
                            Diagnostics* diag = nullptr);

// Same join over combined Soundex codes, so compounds sharing a prefix only
// agree when their heads do too.
Dictionary BuildCombinedSoundexJoin(
    const std::vector<NamePair>& pairs,
    const CodeTable& codes = CodeTable::Builtin(),
    Diagnostics* diag = nullptr);

struct ExpertEdit {
  enum class Action { kAdd, kRemove, kVerify };
  Action action = Action::kAdd;
  std::string arabic;
  std::string latin;
};

// Lines: {add|remove|verify}<TAB>arabic<TAB>latin. Throws kMalformedRow.
std::vector<ExpertEdit> ParseExpertEdits(std::istream& in);
std::vector<ExpertEdit> LoadExpertEdits(const std::string& path);

// Applies edits in order and returns the edited copy. Tokens are run
// through `analyzer` and must each form one name token. Added and verified
// entries become expert-verified; verifying an absent pair adds it.
// Removing an absent pair is reported as kRemoveMissingEntry.
Dictionary ApplyExpertEdits(const Dictionary& dict,
                            const std::vector<ExpertEdit>& edits,
                            const NameAnalyzer& analyzer,
                            Diagnostics* diag = nullptr);

enum class DictionaryStrategy { kSource, kSoundex, kCombined, kVerified };

std::string_view DictionaryStrategyName(DictionaryStrategy strategy);
// Throws kConfigError.
DictionaryStrategy ParseDictionaryStrategy(std::string_view text);

// kVerified runs the combined join and then applies `edits`.
Dictionary BuildDictionary(DictionaryStrategy strategy,
                           const std::vector<NamePair>& pairs,
                           const NameAnalyzer& analyzer,
                           const std::vector<ExpertEdit>& edits = {},
                           Diagnostics* diag = nullptr);

}  // namespace namelink

#endif  // NAMELINK_DICTIONARY_H_
