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

#include "namelink/config.h"

#include <sstream>

#include <gtest/gtest.h>

#include "temp_dir.h"

namespace namelink {
namespace {

PipelineConfig Parse(const std::string& text, const std::string& base = "") {
  std::istringstream in(text);
  return ParseConfig(in, base);
}

ErrorCode CodeOf(const std::string& text) {
  try {
    PipelineConfig c = Parse(text);
    ValidateConfig(c);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for: " << text;
  return ErrorCode::kMalformedData;
}

TEST(ConfigTest, ParsesAllSections) {
  PipelineConfig c = Parse(
      "# linkage run\n"
      "source.path = scholars.csv\n"
      "source.name_column = Author\n"
      "source.order = auto\n"
      "destination.path = /data/umis.tsv\n"
      "destination.id_column = EMP_ID\n"
      "block = governorate, faculty\n"
      "dictionary.path = dict.tsv\n"
      "dictionary.strategy = verified\n"
      "dictionary.edits = edits.tsv\n"
      "normalize.waw_hamza_to_alef = false\n"
      "match.threshold = 0.9\n"
      "match.floor = 0.5\n"
      "match.max_edit_distance = 1\n"
      "match.relax_order = last_name_first\n"
      "match.verify_reverse = no\n"
      "match.threads = 2\n"
      "output.results = out/results.json\n"
      "review.port = 9000\n",
      "/work");
  EXPECT_EQ(c.source.path, "/work/scholars.csv");
  EXPECT_EQ(c.source.name_column, "Author");
  EXPECT_EQ(c.source.order, NameOrder::kAuto);
  EXPECT_EQ(c.destination.path, "/data/umis.tsv");
  EXPECT_EQ(c.destination.id_column, "EMP_ID");
  EXPECT_EQ(c.block, (std::vector<std::string>{"governorate", "faculty"}));
  EXPECT_EQ(c.dictionary_strategy, DictionaryStrategy::kVerified);
  EXPECT_EQ(c.dictionary_edits, "/work/edits.tsv");
  EXPECT_FALSE(c.analyzer.normalize.waw_hamza_to_alef);
  EXPECT_DOUBLE_EQ(c.match.match_threshold, 0.9);
  EXPECT_DOUBLE_EQ(c.match.floor, 0.5);
  EXPECT_EQ(c.match.max_edit_distance, 1u);
  EXPECT_EQ(c.match.relax_order, RelaxOrder::kLastNameFirst);
  EXPECT_FALSE(c.match.verify_reverse);
  EXPECT_EQ(c.match.threads, 2u);
  EXPECT_EQ(c.results_path, "/work/out/results.json");
  EXPECT_EQ(c.review_port, 9000);
  ValidateConfig(c);
}

TEST(ConfigTest, Defaults) {
  PipelineConfig c = Parse("");
  EXPECT_DOUBLE_EQ(c.match.match_threshold, 0.85);
  EXPECT_DOUBLE_EQ(c.match.floor, 0.4);
  EXPECT_EQ(c.match.max_edit_distance, 2u);
  EXPECT_EQ(c.match.relax_order, RelaxOrder::kPaperOrder);
  EXPECT_TRUE(c.match.verify_reverse);
  EXPECT_EQ(c.dictionary_strategy, DictionaryStrategy::kCombined);
}

TEST(ConfigTest, Errors) {
  EXPECT_EQ(CodeOf("unknown.key = 1\n"), ErrorCode::kConfigError);
  EXPECT_EQ(CodeOf("block\n"), ErrorCode::kConfigError);
  EXPECT_EQ(CodeOf("match.threshold = high\n"), ErrorCode::kConfigError);
  EXPECT_EQ(CodeOf("match.threshold = 1.5\n"), ErrorCode::kConfigError);
  EXPECT_EQ(CodeOf("match.threshold = 0.5\nmatch.floor = 0.6\n"),
            ErrorCode::kConfigError);
  EXPECT_EQ(CodeOf("match.threshold = 0.9\nmatch.threshold = 0.8\n"),
            ErrorCode::kConfigError);
  EXPECT_EQ(CodeOf("source.order = sideways\n"), ErrorCode::kConfigError);
  EXPECT_EQ(CodeOf("review.port = 70000\n"), ErrorCode::kConfigError);
  EXPECT_EQ(CodeOf("match.verify_reverse = perhaps\n"),
            ErrorCode::kConfigError);
}

TEST(ConfigTest, LoadResolvesAgainstFileDirectory) {
  testing::TempDir dir;
  std::string path = dir.Write("run.conf", "source.path = a.csv\n");
  EXPECT_EQ(LoadConfig(path).source.path, dir.File("a.csv"));
  try {
    LoadConfig(dir.File("absent.conf"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConfigError);
  }
}

}  // namespace
}  // namespace namelink
