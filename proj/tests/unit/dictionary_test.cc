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

#include <sstream>

#include <gtest/gtest.h>

#include "namelink/analyzer.h"
#include "temp_dir.h"

namespace namelink {
namespace {

using RawPairs = std::vector<std::pair<std::string, std::string>>;
using Keys = std::set<Dictionary::Key>;

const NameAnalyzer& Analyzer() {
  static const NameAnalyzer analyzer;
  return analyzer;
}

std::vector<NamePair> Pairs(const RawPairs& raw, Diagnostics* diag = nullptr) {
  return AnalyzePairs(raw, Analyzer(), NameOrder::kFirstNameFirst, diag);
}

Keys KeysOf(const Dictionary& dict) {
  Keys keys;
  for (const auto& [key, entry] : dict.entries()) keys.insert(key);
  return keys;
}

TEST(SourceExtractedTest, AlignsTokensByPosition) {
  Dictionary d = BuildSourceExtracted(Pairs({{"محمد علي", "Mohamed Ali"}}));
  EXPECT_EQ(KeysOf(d), (Keys{{"محمد", "mohamed"}, {"علي", "ali"}}));
  const DictionaryEntry* e = d.Find("محمد", "mohamed");
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->provenance, Provenance::kSourceExtracted);
  EXPECT_FALSE(e->verified);
  EXPECT_EQ(e->latin_code.str(), "M530");
  EXPECT_EQ(e->arabic_code.str(), "M530");
}

TEST(SourceExtractedTest, AlignsCompoundsAsOneToken) {
  Dictionary d = BuildSourceExtracted(
      Pairs({{"عبد الرحمن محمد", "abdel rahman mohamad"}}));
  EXPECT_EQ(KeysOf(d),
            (Keys{{"عبد الرحمن", "abdel rahman"}, {"محمد", "mohamad"}}));
}

TEST(SourceExtractedTest, SkipsUnequalLengthsAndInitials) {
  Diagnostics diag;
  Dictionary d = BuildSourceExtracted(
      Pairs({{"محمد علي حسن", "Mohamed Ali"}, {"احمد حسن", "A. Hassan"}}),
      CodeTable::Builtin(), &diag);
  EXPECT_EQ(diag.Count(ErrorCode::kSkippedPair), 1u);
  EXPECT_EQ(KeysOf(d), (Keys{{"حسن", "hassan"}}));
}

TEST(AnalyzePairsTest, SkipsWrongScripts) {
  Diagnostics diag;
  std::vector<NamePair> pairs =
      Pairs({{"Mohamed", "محمد"}, {"محمد", "Mohamed"}}, &diag);
  EXPECT_EQ(pairs.size(), 1u);
  EXPECT_EQ(diag.Count(ErrorCode::kSkippedPair), 1u);
}

TEST(SoundexJoinTest, KeepsAgreeingCodes) {
  Dictionary d = BuildSoundexJoin(Pairs({{"بكير", "Bakir"},
                                         {"علاء", "Ola"},
                                         {"بلال", "Bakir"}}));
  EXPECT_NE(d.Find("بكير", "bakir"), nullptr);
  EXPECT_NE(d.Find("علا", "ola"), nullptr);
  EXPECT_EQ(d.Find("بلال", "bakir"), nullptr);
  EXPECT_EQ(d.Find("بكير", "bakir")->provenance, Provenance::kSoundexJoin);
}

TEST(SoundexJoinTest, PlainCodesCannotSeparateCompounds) {
  Dictionary d = BuildSoundexJoin(Pairs({{"عبد العزيز", "Abdel Rahman"}}));
  EXPECT_NE(d.Find("عبد العزيز", "abdel rahman"), nullptr);
}

TEST(CombinedSoundexJoinTest, SeparatesCompounds) {
  Dictionary d = BuildCombinedSoundexJoin(Pairs({{"عبد العزيز", "Abdel Aziz"},
                                                 {"عبد العزيز", "Abdel Rahman"},
                                                 {"محمد", "Mohamed"}}));
  EXPECT_EQ(KeysOf(d), (Keys{{"عبد العزيز", "abdel aziz"},
                             {"محمد", "mohamed"}}));
  EXPECT_EQ(d.Find("محمد", "mohamed")->provenance,
            Provenance::kCombinedSoundexJoin);
  EXPECT_EQ(d.Find("عبد العزيز", "abdel aziz")->latin_code.str(), "A134A220");
}

TEST(CombinedSoundexJoinTest, FiltersPlantedMisalignments) {
  // Names with pairwise distinct codes, so every misaligned pair disagrees.
  const RawPairs vocabulary = {
      {"محمد", "mohamed"}, {"علي", "ali"},     {"حسن", "hassan"},
      {"بكير", "bakir"},   {"بلال", "belal"},  {"سمير", "samir"},
      {"طارق", "tarek"},   {"كريم", "karim"},  {"نور", "nour"},
      {"جمال", "gamal"},   {"شريف", "sherif"}, {"رضا", "reda"}};
  RawPairs raw;
  Keys wrong;
  for (size_t i = 0; i < 1000; ++i) {
    const auto& a = vocabulary[i % vocabulary.size()];
    const auto& b = vocabulary[(i * 7 + 3) % vocabulary.size()];
    if (a == b) continue;
    if (i % 10 == 0) {
      raw.push_back({a.first + " " + b.first, b.second + " " + a.second});
      wrong.insert({a.first, b.second});
      wrong.insert({b.first, a.second});
    } else {
      raw.push_back({a.first + " " + b.first, a.second + " " + b.second});
    }
  }
  std::vector<NamePair> pairs = Pairs(raw);
  Keys extracted = KeysOf(BuildSourceExtracted(pairs));
  Keys joined = KeysOf(BuildCombinedSoundexJoin(pairs));
  for (const Dictionary::Key& key : wrong) {
    EXPECT_TRUE(extracted.count(key)) << key.first << "/" << key.second;
    EXPECT_FALSE(joined.count(key)) << key.first << "/" << key.second;
  }
  for (const auto& [arabic, latin] : vocabulary) {
    EXPECT_TRUE(joined.count({arabic, latin})) << latin;
  }
}

TEST(ExpertEditsTest, AddVerifyRemove) {
  Dictionary d = BuildSoundexJoin(Pairs({{"بكير", "Bakir"},
                                         {"عبد العزيز", "Abdel Rahman"}}));
  std::istringstream in(
      "add\tعلاء\tOla\n"
      "verify\tبكير\tbakir\n"
      "remove\tعبد العزيز\tabdel rahman\n"
      "remove\tمحمد\tmohamed\n");
  Diagnostics diag;
  Dictionary edited =
      ApplyExpertEdits(d, ParseExpertEdits(in), Analyzer(), &diag);
  const DictionaryEntry* ola = edited.Find("علا", "ola");
  ASSERT_NE(ola, nullptr);
  EXPECT_TRUE(ola->verified);
  EXPECT_EQ(ola->provenance, Provenance::kExpertVerified);
  const DictionaryEntry* bakir = edited.Find("بكير", "bakir");
  ASSERT_NE(bakir, nullptr);
  EXPECT_TRUE(bakir->verified);
  EXPECT_EQ(bakir->arabic_code.str(), "B260");
  EXPECT_EQ(edited.Find("عبد العزيز", "abdel rahman"), nullptr);
  EXPECT_EQ(diag.Count(ErrorCode::kRemoveMissingEntry), 1u);
  // The input is left alone.
  EXPECT_NE(d.Find("عبد العزيز", "abdel rahman"), nullptr);
}

TEST(ExpertEditsTest, VerifyingAnAbsentPairAddsIt) {
  std::istringstream in("verify\tعلاء\tola\n");
  Dictionary edited = ApplyExpertEdits({}, ParseExpertEdits(in), Analyzer());
  ASSERT_NE(edited.Find("علا", "ola"), nullptr);
  EXPECT_TRUE(edited.Find("علا", "ola")->verified);
}

TEST(ExpertEditsTest, MalformedLines) {
  std::istringstream bad_action("rename\tعلاء\tola\n");
  EXPECT_THROW(ParseExpertEdits(bad_action), Error);
  std::istringstream short_line("add\tعلاء\n");
  EXPECT_THROW(ParseExpertEdits(short_line), Error);
}

TEST(LookupTest, BothDirections) {
  Dictionary d = BuildCombinedSoundexJoin(Pairs({{"بكير", "Bakir"},
                                                 {"احمد", "Ahmed"},
                                                 {"إيمان", "Eman"},
                                                 {"عادل", "Adel"}}));
  EXPECT_EQ(d.LookupLatin("bakir"), (std::set<std::string>{"بكير"}));
  EXPECT_TRUE(d.LookupLatin("zzz-unknown").empty());
  EXPECT_EQ(d.LookupArabic("ايمان"), (std::set<std::string>{"eman"}));
  std::set<std::string> a = d.LookupLatin("a");
  EXPECT_TRUE(a.count("احمد"));
  EXPECT_TRUE(a.count("ايمان"));
  EXPECT_TRUE(a.count("عادل"));
  EXPECT_FALSE(a.count("بكير"));
}

TEST(DictionaryTest, InsertRemoveReplace) {
  Dictionary d;
  DictionaryEntry e{"بكير", "bakir", CombinedSoundexCode::Parse("B260"),
                    CombinedSoundexCode::Parse("B260")};
  EXPECT_TRUE(d.Insert(e));
  e.verified = true;
  EXPECT_FALSE(d.Insert(e));
  EXPECT_EQ(d.size(), 1u);
  EXPECT_TRUE(d.Find("بكير", "bakir")->verified);
  EXPECT_TRUE(d.Remove("بكير", "bakir"));
  EXPECT_FALSE(d.Remove("بكير", "bakir"));
  EXPECT_TRUE(d.LookupLatin("bakir").empty());
  EXPECT_TRUE(d.empty());
}

TEST(DictionaryTest, SaveLoadRoundTrip) {
  std::istringstream edits("verify\tبكير\tbakir\n");
  Dictionary d = BuildDictionary(
      DictionaryStrategy::kVerified,
      Pairs({{"بكير", "Bakir"}, {"محمد عبد العزيز", "Mohamed Abdel Aziz"}}),
      Analyzer(), ParseExpertEdits(edits));
  std::stringstream buffer;
  d.Save(buffer);
  Dictionary loaded = Dictionary::Load(buffer);
  EXPECT_EQ(loaded.entries(), d.entries());

  testing::TempDir dir;
  d.SaveFile(dir.File("dict.tsv"));
  EXPECT_EQ(Dictionary::LoadFile(dir.File("dict.tsv")).entries(), d.entries());
}

TEST(DictionaryTest, LoadErrors) {
  try {
    Dictionary::LoadFile("/nonexistent/dict.tsv");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDictionaryMissing);
  }
  std::istringstream bad("بكير\tbakir\tB260\n");
  EXPECT_THROW(Dictionary::Load(bad), Error);
  std::istringstream bad_code("بكير\tbakir\tB26\tB260\tsoundex_join\t0\n");
  EXPECT_THROW(Dictionary::Load(bad_code), Error);
}

TEST(DictionaryStrategyTest, Names) {
  EXPECT_EQ(ParseDictionaryStrategy("combined"), DictionaryStrategy::kCombined);
  EXPECT_EQ(DictionaryStrategyName(DictionaryStrategy::kSource), "source");
  try {
    ParseDictionaryStrategy("magic");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConfigError);
  }
  EXPECT_EQ(ParseProvenance("expert_verified"), Provenance::kExpertVerified);
  EXPECT_THROW(ParseProvenance("rumor"), Error);
}

}  // namespace
}  // namespace namelink
