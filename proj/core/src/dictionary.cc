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

#include "namelink/dictionary.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "namelink/unicode.h"

namespace namelink {
namespace {

enum class JoinMode { kNone, kPlain, kCombined };

std::vector<std::string> SplitTabs(const std::string& line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

bool IsSingleLetter(std::string_view token) {
  return token.size() == 1 && std::isalpha(static_cast<unsigned char>(token[0]));
}

std::string RowError(size_t line_no, std::string_view what) {
  return "line " + std::to_string(line_no) + ": " + std::string(what);
}

struct TokenCodes {
  std::vector<CombinedSoundexCode> arabic;
  CombinedSoundexCode latin;
};

TokenCodes CodeTokens(const NameToken& arabic, const NameToken& latin,
                      JoinMode mode, const CodeTable& codes,
                      Diagnostics* diag) {
  if (mode == JoinMode::kPlain) {
    std::vector<CombinedSoundexCode> variants;
    for (SoundexCode& c : SoundexVariants(arabic.canonical, codes, diag)) {
      variants.emplace_back(std::move(c));
    }
    return {std::move(variants),
            CombinedSoundexCode(EnglishSoundex(latin.canonical, codes))};
  }
  return {CombinedSoundexVariants(arabic, codes, diag),
          CombinedSoundex(latin, codes, diag)};
}

Dictionary BuildAligned(const std::vector<NamePair>& pairs,
                        const CodeTable& codes, JoinMode mode,
                        Provenance provenance, Diagnostics* diag) {
  Dictionary dict;
  for (const NamePair& pair : pairs) {
    if (pair.arabic.tokens.size() != pair.latin.tokens.size()) {
      Warn(diag, ErrorCode::kSkippedPair,
           "token counts differ: '" + pair.arabic.CanonicalText() + "' / '" +
               pair.latin.CanonicalText() + "'");
      continue;
    }
    for (size_t k = 0; k < pair.arabic.tokens.size(); ++k) {
      const NameToken& ar = pair.arabic.tokens[k];
      const NameToken& la = pair.latin.tokens[k];
      if (IsSingleLetter(la.canonical)) continue;
      std::optional<TokenCodes> coded;
      try {
        coded = CodeTokens(ar, la, mode, codes, diag);
      } catch (const Error& e) {
        Warn(diag, ErrorCode::kSkippedPair,
             "cannot code '" + ar.canonical + "' / '" + la.canonical +
                 "': " + e.what());
        continue;
      }
      auto match = coded->arabic.begin();
      if (mode != JoinMode::kNone) {
        match = std::find(coded->arabic.begin(), coded->arabic.end(),
                          coded->latin);
        if (match == coded->arabic.end()) continue;
      }
      dict.Insert(DictionaryEntry{ar.canonical, la.canonical, *match,
                                  coded->latin, provenance, false});
    }
  }
  return dict;
}

std::string CanonicalToken(const NameAnalyzer& analyzer,
                           const std::string& text, Script script) {
  ParsedName parsed = analyzer.Analyze(text);
  if (parsed.original.script != script || parsed.tokens.size() != 1) {
    throw Error(ErrorCode::kMalformedRow,
                "'" + text + "' is not a single " +
                    std::string(ScriptName(script)) + " name token");
  }
  return parsed.tokens[0].canonical;
}

}  // namespace

std::string_view ProvenanceName(Provenance provenance) {
  switch (provenance) {
    case Provenance::kSourceExtracted: return "source_extracted";
    case Provenance::kSoundexJoin: return "soundex_join";
    case Provenance::kCombinedSoundexJoin: return "combined_soundex_join";
    case Provenance::kExpertVerified: return "expert_verified";
  }
  return "source_extracted";
}

Provenance ParseProvenance(std::string_view text) {
  for (Provenance p :
       {Provenance::kSourceExtracted, Provenance::kSoundexJoin,
        Provenance::kCombinedSoundexJoin, Provenance::kExpertVerified}) {
    if (ProvenanceName(p) == text) return p;
  }
  throw Error(ErrorCode::kMalformedData,
              "unknown provenance '" + std::string(text) + "'");
}

bool Dictionary::Insert(DictionaryEntry entry) {
  Key key(entry.arabic, entry.latin);
  arabic_index_[entry.arabic].insert(entry.latin);
  latin_index_[entry.latin].insert(entry.arabic);
  auto [it, inserted] = entries_.insert_or_assign(key, std::move(entry));
  return inserted;
}

bool Dictionary::Remove(std::string_view arabic, std::string_view latin) {
  auto it = entries_.find(Key(arabic, latin));
  if (it == entries_.end()) return false;
  entries_.erase(it);
  auto drop = [](auto& index, std::string_view from, std::string_view to) {
    auto found = index.find(from);
    found->second.erase(std::string(to));
    if (found->second.empty()) index.erase(found);
  };
  drop(arabic_index_, arabic, latin);
  drop(latin_index_, latin, arabic);
  return true;
}

const DictionaryEntry* Dictionary::Find(std::string_view arabic,
                                        std::string_view latin) const {
  auto it = entries_.find(Key(arabic, latin));
  return it == entries_.end() ? nullptr : &it->second;
}

std::set<std::string> Dictionary::LookupLatin(std::string_view latin,
                                              const CodeTable& codes) const {
  if (IsSingleLetter(latin)) {
    const char upper =
        static_cast<char>(std::toupper(static_cast<unsigned char>(latin[0])));
    std::set<std::string> out;
    for (const auto& [arabic, latins] : arabic_index_) {
      if (codes.Romanizations(FirstCodePoint(arabic)).find(upper) !=
          std::string_view::npos) {
        out.insert(arabic);
      }
    }
    return out;
  }
  auto it = latin_index_.find(latin);
  return it == latin_index_.end() ? std::set<std::string>{} : it->second;
}

std::set<std::string> Dictionary::LookupArabic(std::string_view arabic) const {
  auto it = arabic_index_.find(arabic);
  return it == arabic_index_.end() ? std::set<std::string>{} : it->second;
}

void Dictionary::Save(std::ostream& out) const {
  for (const auto& [key, e] : entries_) {
    out << e.arabic << '\t' << e.latin << '\t' << e.arabic_code.str() << '\t'
        << e.latin_code.str() << '\t' << ProvenanceName(e.provenance) << '\t'
        << (e.verified ? "true" : "false") << '\n';
  }
}

void Dictionary::SaveFile(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  Save(out);
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path);
}

Dictionary Dictionary::Load(std::istream& in) {
  Dictionary dict;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f = SplitTabs(line);
    if (f.size() != 6 || f[0].empty() || f[1].empty()) {
      throw Error(ErrorCode::kMalformedRow,
                  RowError(line_no, "expected 6 tab-separated fields"));
    }
    if (f[5] != "true" && f[5] != "false") {
      throw Error(ErrorCode::kMalformedRow,
                  RowError(line_no, "verified must be true or false"));
    }
    try {
      dict.Insert(DictionaryEntry{f[0], f[1], CombinedSoundexCode::Parse(f[2]),
                                  CombinedSoundexCode::Parse(f[3]),
                                  ParseProvenance(f[4]), f[5] == "true"});
    } catch (const Error& e) {
      throw Error(ErrorCode::kMalformedRow, RowError(line_no, e.what()));
    }
  }
  return dict;
}

Dictionary Dictionary::LoadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kDictionaryMissing, "cannot open " + path);
  }
  return Load(in);
}

std::vector<NamePair> AnalyzePairs(
    const std::vector<std::pair<std::string, std::string>>& raw,
    const NameAnalyzer& analyzer, NameOrder latin_order, Diagnostics* diag) {
  std::vector<NamePair> out;
  out.reserve(raw.size());
  for (const auto& [arabic, latin] : raw) {
    try {
      NamePair pair{analyzer.Analyze(arabic, NameOrder::kFirstNameFirst, diag),
                    analyzer.Analyze(latin, latin_order, diag)};
      if (pair.arabic.original.script != Script::kArabic ||
          pair.latin.original.script != Script::kLatin) {
        Warn(diag, ErrorCode::kSkippedPair,
             "wrong scripts in pair '" + arabic + "' / '" + latin + "'");
        continue;
      }
      out.push_back(std::move(pair));
    } catch (const Error& e) {
      Warn(diag, ErrorCode::kSkippedPair,
           "pair '" + arabic + "' / '" + latin + "': " + e.what());
    }
  }
  return out;
}

Dictionary BuildSourceExtracted(const std::vector<NamePair>& pairs,
                                const CodeTable& codes, Diagnostics* diag) {
  return BuildAligned(pairs, codes, JoinMode::kNone,
                      Provenance::kSourceExtracted, diag);
}

Dictionary BuildSoundexJoin(const std::vector<NamePair>& pairs,
                            const CodeTable& codes, Diagnostics* diag) {
  return BuildAligned(pairs, codes, JoinMode::kPlain, Provenance::kSoundexJoin,
                      diag);
}

Dictionary BuildCombinedSoundexJoin(const std::vector<NamePair>& pairs,
                                    const CodeTable& codes,
                                    Diagnostics* diag) {
  return BuildAligned(pairs, codes, JoinMode::kCombined,
                      Provenance::kCombinedSoundexJoin, diag);
}

std::vector<ExpertEdit> ParseExpertEdits(std::istream& in) {
  std::vector<ExpertEdit> edits;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f = SplitTabs(line);
    if (f.size() != 3 || f[1].empty() || f[2].empty()) {
      throw Error(ErrorCode::kMalformedRow,
                  RowError(line_no, "expected action<TAB>arabic<TAB>latin"));
    }
    ExpertEdit edit;
    if (f[0] == "add") {
      edit.action = ExpertEdit::Action::kAdd;
    } else if (f[0] == "remove") {
      edit.action = ExpertEdit::Action::kRemove;
    } else if (f[0] == "verify") {
      edit.action = ExpertEdit::Action::kVerify;
    } else {
      throw Error(ErrorCode::kMalformedRow,
                  RowError(line_no, "unknown action '" + f[0] + "'"));
    }
    edit.arabic = f[1];
    edit.latin = f[2];
    edits.push_back(std::move(edit));
  }
  return edits;
}

std::vector<ExpertEdit> LoadExpertEdits(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  return ParseExpertEdits(in);
}

Dictionary ApplyExpertEdits(const Dictionary& dict,
                            const std::vector<ExpertEdit>& edits,
                            const NameAnalyzer& analyzer, Diagnostics* diag) {
  Dictionary out = dict;
  for (const ExpertEdit& edit : edits) {
    std::string arabic = CanonicalToken(analyzer, edit.arabic, Script::kArabic);
    std::string latin = CanonicalToken(analyzer, edit.latin, Script::kLatin);
    if (edit.action == ExpertEdit::Action::kRemove) {
      if (!out.Remove(arabic, latin)) {
        Warn(diag, ErrorCode::kRemoveMissingEntry,
             "no entry for '" + arabic + "' / '" + latin + "'");
      }
      continue;
    }
    if (const DictionaryEntry* existing = out.Find(arabic, latin)) {
      DictionaryEntry updated = *existing;
      updated.provenance = Provenance::kExpertVerified;
      updated.verified = true;
      out.Insert(std::move(updated));
      continue;
    }
    ParsedName ar = analyzer.Analyze(arabic);
    ParsedName la = analyzer.Analyze(latin);
    TokenCodes coded = CodeTokens(ar.tokens[0], la.tokens[0],
                                  JoinMode::kCombined, analyzer.codes(), diag);
    auto match =
        std::find(coded.arabic.begin(), coded.arabic.end(), coded.latin);
    if (match == coded.arabic.end()) match = coded.arabic.begin();
    out.Insert(DictionaryEntry{arabic, latin, *match, coded.latin,
                               Provenance::kExpertVerified, true});
  }
  return out;
}

std::string_view DictionaryStrategyName(DictionaryStrategy strategy) {
  switch (strategy) {
    case DictionaryStrategy::kSource: return "source";
    case DictionaryStrategy::kSoundex: return "soundex";
    case DictionaryStrategy::kCombined: return "combined";
    case DictionaryStrategy::kVerified: return "verified";
  }
  return "combined";
}

DictionaryStrategy ParseDictionaryStrategy(std::string_view text) {
  for (DictionaryStrategy s :
       {DictionaryStrategy::kSource, DictionaryStrategy::kSoundex,
        DictionaryStrategy::kCombined, DictionaryStrategy::kVerified}) {
    if (DictionaryStrategyName(s) == text) return s;
  }
  throw Error(ErrorCode::kConfigError,
              "unknown dictionary strategy '" + std::string(text) + "'");
}

Dictionary BuildDictionary(DictionaryStrategy strategy,
                           const std::vector<NamePair>& pairs,
                           const NameAnalyzer& analyzer,
                           const std::vector<ExpertEdit>& edits,
                           Diagnostics* diag) {
  const CodeTable& codes = analyzer.codes();
  switch (strategy) {
    case DictionaryStrategy::kSource:
      return BuildSourceExtracted(pairs, codes, diag);
    case DictionaryStrategy::kSoundex:
      return BuildSoundexJoin(pairs, codes, diag);
    case DictionaryStrategy::kCombined:
      return BuildCombinedSoundexJoin(pairs, codes, diag);
    case DictionaryStrategy::kVerified:
      return ApplyExpertEdits(BuildCombinedSoundexJoin(pairs, codes, diag),
                              edits, analyzer, diag);
  }
  return Dictionary();
}

}  // namespace namelink
