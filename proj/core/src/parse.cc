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

#include "namelink/parse.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <utility>

#include "builtin_data.h"

namespace namelink {
namespace {

constexpr std::string_view kLatinArticle = "el";
constexpr std::string_view kArabicArticle = "ال";

std::vector<std::string> SplitWords(std::string_view text) {
  std::vector<std::string> words;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find(' ', start);
    if (end == std::string_view::npos) end = text.size();
    if (end > start) words.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return words;
}

std::string JoinWords(const std::vector<std::string>& words, size_t from,
                      size_t to) {
  std::string out;
  for (size_t i = from; i < to; ++i) {
    if (i > from) out += ' ';
    out += words[i];
  }
  return out;
}

std::vector<std::string> SplitTabs(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, '\t')) fields.push_back(field);
  return fields;
}

// Joins canonical pieces with spaces, except that the Arabic article glues
// onto whatever follows it.
std::string JoinCanonical(const std::vector<std::string_view>& pieces) {
  std::string out;
  bool glue = false;
  for (std::string_view piece : pieces) {
    if (!out.empty() && !glue) out += ' ';
    out += piece;
    glue = piece == kArabicArticle;
  }
  return out;
}

}  // namespace

std::string_view NameOrderName(NameOrder order) {
  switch (order) {
    case NameOrder::kFirstNameFirst: return "first_name_first";
    case NameOrder::kLastNameFirst: return "last_name_first";
    case NameOrder::kAuto: return "auto";
  }
  return "auto";
}

NameOrder ParseNameOrder(std::string_view text) {
  if (text == "first_name_first" || text == "first") {
    return NameOrder::kFirstNameFirst;
  }
  if (text == "last_name_first" || text == "last") {
    return NameOrder::kLastNameFirst;
  }
  if (text == "auto") return NameOrder::kAuto;
  throw Error(ErrorCode::kConfigError,
              "unknown name order '" + std::string(text) + "'");
}

PrefixTable::PrefixTable(std::vector<AffixEntry> entries)
    : entries_(std::move(entries)) {
  for (size_t i = 0; i < entries_.size(); ++i) {
    const AffixEntry& e = entries_[i];
    auto& index =
        e.kind == AffixKind::kPrefix ? prefix_index_ : postfix_index_;
    index.emplace(e.variant, i);
    max_words_ = std::max(max_words_, SplitWords(e.variant).size());
  }
}

const PrefixTable& PrefixTable::Builtin() {
  static const PrefixTable table = [] {
    std::istringstream in{std::string(internal::kBuiltinPrefixes)};
    return Parse(in);
  }();
  return table;
}

PrefixTable PrefixTable::Parse(std::istream& in) {
  std::vector<AffixEntry> entries;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields = SplitTabs(line);
    if (fields.size() != 3 || fields[0].empty() || fields[1].empty()) {
      throw Error(ErrorCode::kMalformedData,
                  "prefix table line " + std::to_string(line_no) +
                      ": expected variant<TAB>canonical<TAB>kind");
    }
    AffixEntry entry;
    entry.variant = fields[0];
    entry.canonical = fields[1];
    if (fields[2] == "prefix") {
      entry.kind = AffixKind::kPrefix;
    } else if (fields[2] == "postfix") {
      entry.kind = AffixKind::kPostfix;
    } else {
      throw Error(ErrorCode::kMalformedData,
                  "prefix table line " + std::to_string(line_no) +
                      ": unknown kind '" + fields[2] + "'");
    }
    entries.push_back(std::move(entry));
  }
  return PrefixTable(std::move(entries));
}

PrefixTable PrefixTable::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  return Parse(in);
}

std::vector<std::string> PrefixTable::prefixes() const {
  std::vector<std::string> out;
  for (const AffixEntry& e : entries_) {
    if (e.kind == AffixKind::kPrefix) out.push_back(e.variant);
  }
  return out;
}

std::vector<std::string> PrefixTable::postfixes() const {
  std::vector<std::string> out;
  for (const AffixEntry& e : entries_) {
    if (e.kind == AffixKind::kPostfix) out.push_back(e.variant);
  }
  return out;
}

const AffixEntry* PrefixTable::LongestMatch(
    const std::vector<std::string>& words, size_t at, AffixKind kind,
    size_t* length) const {
  const auto& index =
      kind == AffixKind::kPrefix ? prefix_index_ : postfix_index_;
  size_t limit = std::min(max_words_, words.size() - std::min(at, words.size()));
  for (size_t n = limit; n >= 1; --n) {
    auto it = index.find(JoinWords(words, at, at + n));
    if (it != index.end()) {
      *length = n;
      return &entries_[it->second];
    }
  }
  *length = 0;
  return nullptr;
}

std::string PrefixTable::Canonical(std::string_view variant,
                                   AffixKind kind) const {
  const auto& index =
      kind == AffixKind::kPrefix ? prefix_index_ : postfix_index_;
  auto it = index.find(variant);
  return it == index.end() ? std::string(variant)
                           : entries_[it->second].canonical;
}

bool IsArticle(std::string_view canonical) {
  return canonical == kLatinArticle || canonical == kArabicArticle;
}

NameToken NameToken::Simple(std::string word) {
  NameToken token;
  token.surface = word;
  token.canonical = word;
  token.head = std::move(word);
  return token;
}

std::vector<std::string> ParsedName::Canonicals() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const NameToken& t : tokens) out.push_back(t.canonical);
  return out;
}

std::string ParsedName::CanonicalText() const {
  std::string out;
  for (const NameToken& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.canonical;
  }
  return out;
}

ParsedName Split(const NormalizedName& name) {
  ParsedName parsed;
  parsed.original = name;
  for (std::string& word : SplitWords(name.text)) {
    parsed.tokens.push_back(NameToken::Simple(std::move(word)));
  }
  if (parsed.tokens.empty()) {
    throw Error(ErrorCode::kEmptyName, "name has no tokens");
  }
  return parsed;
}

ParsedName Reorder(const ParsedName& parsed, NameOrder order,
                   const PrefixTable& table) {
  if (order == NameOrder::kFirstNameFirst ||
      parsed.original.script != Script::kLatin) {
    return parsed;
  }
  if (order == NameOrder::kAuto && !parsed.original.surname_words) {
    return parsed;
  }
  std::vector<std::string> words;
  for (const NameToken& t : parsed.tokens) {
    for (std::string& w : SplitWords(t.surface)) words.push_back(std::move(w));
  }
  size_t segment = 0;
  if (parsed.original.surname_words) {
    segment = *parsed.original.surname_words;
  } else {
    size_t at = 0;
    size_t length = 0;
    while (at < words.size() &&
           table.LongestMatch(words, at, AffixKind::kPrefix, &length)) {
      at += length;
    }
    segment = at < words.size() ? at + 1 : 1;
  }
  if (segment == 0 || segment >= words.size()) return parsed;

  ParsedName out;
  out.original = parsed.original;
  for (size_t i = segment; i < words.size(); ++i) {
    out.tokens.push_back(NameToken::Simple(words[i]));
  }
  NameToken surname = NameToken::Simple(JoinWords(words, 0, segment));
  surname.is_compound = segment > 1;
  out.tokens.push_back(std::move(surname));
  return out;
}

ParsedName RestoreSurnameFirst(const ParsedName& parsed) {
  ParsedName out = parsed;
  if (out.tokens.size() > 1) {
    NameToken last = std::move(out.tokens.back());
    out.tokens.pop_back();
    out.tokens.insert(out.tokens.begin(), std::move(last));
  }
  return out;
}

ParsedName MergeCompounds(const ParsedName& parsed, const PrefixTable& table,
                          const ParseOptions& options, Diagnostics* diag) {
  std::vector<std::string> words;
  for (const NameToken& t : parsed.tokens) {
    for (std::string& w : SplitWords(t.surface)) words.push_back(std::move(w));
  }
  auto prefix_at = [&](size_t at, size_t* length) -> const AffixEntry* {
    const AffixEntry* e =
        table.LongestMatch(words, at, AffixKind::kPrefix, length);
    if (e != nullptr && !options.merge_bare_articles && IsArticle(e->canonical)) {
      *length = 0;
      return nullptr;
    }
    return e;
  };

  ParsedName out;
  out.original = parsed.original;
  size_t j = 0;
  while (j < words.size()) {
    std::vector<const AffixEntry*> run;
    size_t k = j;
    size_t length = 0;
    while (k < words.size()) {
      const AffixEntry* e = prefix_at(k, &length);
      if (e == nullptr) break;
      run.push_back(e);
      k += length;
    }
    if (!run.empty()) {
      if (k >= words.size()) {
        Warn(diag, ErrorCode::kDanglingPrefix,
             "name '" + parsed.original.text + "' ends in prefix '" +
                 JoinWords(words, j, words.size()) + "'");
        for (; j < words.size(); ++j) {
          out.tokens.push_back(NameToken::Simple(words[j]));
        }
        break;
      }
      NameToken token;
      token.surface = JoinWords(words, j, k + 1);
      token.is_compound = true;
      std::vector<std::string_view> pieces;
      for (const AffixEntry* e : run) pieces.push_back(e->canonical);
      token.prefix = JoinCanonical(pieces);
      token.head = words[k];
      pieces.push_back(token.head);
      token.canonical = JoinCanonical(pieces);
      out.tokens.push_back(std::move(token));
      j = k + 1;
      continue;
    }
    const AffixEntry* post =
        table.LongestMatch(words, j + 1, AffixKind::kPostfix, &length);
    if (post != nullptr) {
      NameToken token;
      token.surface = JoinWords(words, j, j + 1 + length);
      token.is_compound = true;
      token.head = words[j];
      token.postfix = post->canonical;
      token.canonical = token.head + " " + token.postfix;
      out.tokens.push_back(std::move(token));
      j += 1 + length;
      continue;
    }
    out.tokens.push_back(NameToken::Simple(words[j]));
    ++j;
  }
  return out;
}

}  // namespace namelink
