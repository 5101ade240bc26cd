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

#ifndef NAMELINK_PARSE_H_
#define NAMELINK_PARSE_H_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "namelink/error.h"
#include "namelink/normalize.h"

namespace namelink {

enum class NameOrder {
  kFirstNameFirst,
  kLastNameFirst,
  // LastNameFirst when the raw text carries a comma, FirstNameFirst otherwise.
  kAuto,
};

std::string_view NameOrderName(NameOrder order);
NameOrder ParseNameOrder(std::string_view text);

enum class AffixKind { kPrefix, kPostfix };

struct AffixEntry {
  std::string variant;    // normalized, words separated by single spaces
  std::string canonical;
  AffixKind kind = AffixKind::kPrefix;
};

// Spelling variants of compound-name prefixes ("abd el", "abdul", ...) and
// postfixes ("el din", "allah", ...), each mapped to one canonical spelling.
class PrefixTable {
 public:
  PrefixTable() = default;
  explicit PrefixTable(std::vector<AffixEntry> entries);

  // The table that ships in data/prefixes.tsv.
  static const PrefixTable& Builtin();

  // Lines: variant<TAB>canonical<TAB>{prefix|postfix}. Blank lines and lines
  // starting with '#' are skipped. Throws kMalformedData.
  static PrefixTable Parse(std::istream& in);
  static PrefixTable Load(const std::string& path);

  const std::vector<AffixEntry>& entries() const { return entries_; }
  std::vector<std::string> prefixes() const;
  std::vector<std::string> postfixes() const;

  // Longest entry of `kind` whose words equal words[at..]. Returns nullptr
  // when none matches. Sets *length to the number of words consumed.
  const AffixEntry* LongestMatch(const std::vector<std::string>& words,
                                 size_t at, AffixKind kind,
                                 size_t* length) const;

  std::string Canonical(std::string_view variant, AffixKind kind) const;

 private:
  std::vector<AffixEntry> entries_;
  std::map<std::string, size_t, std::less<>> prefix_index_;
  std::map<std::string, size_t, std::less<>> postfix_index_;
  size_t max_words_ = 0;
};

// True for the definite article ("el" in Latin, the attached article in
// Arabic) used as a canonical prefix.
bool IsArticle(std::string_view canonical);

struct NameToken {
  std::string surface;    // words as they appeared, space separated
  std::string canonical;  // unified spelling used for lookup and joins
  bool is_compound = false;

  // Structure of a compound, all canonical. `prefix` holds the prefix run
  // with words joined by spaces; `postfix` is empty for prefix compounds.
  std::string prefix;
  std::string head;
  std::string postfix;

  static NameToken Simple(std::string word);
};

struct ParsedName {
  std::vector<NameToken> tokens;
  NormalizedName original;

  std::vector<std::string> Canonicals() const;
  // Canonical tokens joined by single spaces.
  std::string CanonicalText() const;
};

struct ParseOptions {
  // Lets a bare article ("el", "al") merge with the following word.
  bool merge_bare_articles = true;
};

// Whitespace split of a normalized name. Throws kEmptyName.
ParsedName Split(const NormalizedName& name);

// Moves the leading surname of a LastNameFirst Latin name to the end. The
// surname is the comma-delimited segment when the raw text had a comma,
// otherwise a run of prefixes plus one head word. A multi-word surname moves
// as one compound token. kAuto reorders only when a comma was seen.
ParsedName Reorder(const ParsedName& parsed, NameOrder order,
                   const PrefixTable& table);

// Inverse of Reorder(kLastNameFirst): moves the trailing surname token back
// to the front.
ParsedName RestoreSurnameFirst(const ParsedName& parsed);

// Merges prefix runs with their head word and head words with a following
// postfix into compound tokens carrying canonical spellings. A trailing
// prefix with no head is left alone and reported as kDanglingPrefix.
ParsedName MergeCompounds(const ParsedName& parsed, const PrefixTable& table,
                          const ParseOptions& options = {},
                          Diagnostics* diag = nullptr);

}  // namespace namelink

#endif  // NAMELINK_PARSE_H_
