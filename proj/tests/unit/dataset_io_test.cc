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

#include "namelink/dataset_io.h"

#include <sstream>

#include <gtest/gtest.h>

#include "temp_dir.h"

namespace namelink {
namespace {

Dataset Parse(const std::string& text, DatasetDescriptor d = {},
              Diagnostics* diag = nullptr) {
  std::istringstream in(text);
  if (d.delimiter == 0) d.delimiter = ',';
  return ParseDataset(in, d, diag);
}

TEST(DelimitedReaderTest, QuotedFieldsAndLineNumbers) {
  std::istringstream in(
      "\xEF\xBB\xBF" "a,b\n"
      "\"x, y\",\"say \"\"hi\"\"\"\n"
      "\"two\nlines\",z\r\n"
      "last,row");
  DelimitedReader reader(in, ',');
  std::vector<std::string> row;
  size_t line = 0;
  ASSERT_TRUE(reader.Next(&row, &line));
  EXPECT_EQ(row, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(line, 1u);
  ASSERT_TRUE(reader.Next(&row, &line));
  EXPECT_EQ(row, (std::vector<std::string>{"x, y", "say \"hi\""}));
  ASSERT_TRUE(reader.Next(&row, &line));
  EXPECT_EQ(row, (std::vector<std::string>{"two\nlines", "z"}));
  EXPECT_EQ(line, 3u);
  ASSERT_TRUE(reader.Next(&row, &line));
  EXPECT_EQ(line, 5u);
  EXPECT_FALSE(reader.Next(&row, &line));
}

TEST(DelimitedReaderTest, UnterminatedQuoteThrows) {
  std::istringstream in("a,\"open\n");
  DelimitedReader reader(in, ',');
  std::vector<std::string> row;
  size_t line = 0;
  EXPECT_THROW(reader.Next(&row, &line), Error);
}

TEST(ParseDatasetTest, ArabicRosterColumns) {
  DatasetDescriptor d;
  d.id_column = "EMP_ID";
  d.name_column = "FULL_NAME_AR";
  Dataset ds = Parse(
      "EMP_ID,FULL_NAME_AR,GOVERNORATE,EMP_DATE\n"
      "1,سالي صلاح عنتر قاسم,القاهرة,2001-09-01\n"
      "2,محمد عبد الفتاح سلامة,الجيزة,1999-03-15\n",
      d);
  ASSERT_EQ(ds.records.size(), 2u);
  EXPECT_EQ(ds.records[0].id, "1");
  EXPECT_EQ(ds.records[0].name, "سالي صلاح عنتر قاسم");
  EXPECT_EQ(ds.records[1].fields.at("GOVERNORATE"), "الجيزة");
  EXPECT_EQ(ds.records[1].line, 3u);
  EXPECT_EQ(ds.columns.size(), 4u);
}

TEST(ParseDatasetTest, LatinAuthorColumnKeepsOrder) {
  DatasetDescriptor d;
  d.name_column = "Author";
  d.order = NameOrder::kLastNameFirst;
  Dataset ds = Parse("id,Author\nx1,\"Wadie, Bassem S\"\n", d);
  ASSERT_EQ(ds.records.size(), 1u);
  EXPECT_EQ(ds.records[0].name, "Wadie, Bassem S");
  EXPECT_EQ(ds.order, NameOrder::kLastNameFirst);
}

TEST(ParseDatasetTest, SkipsMalformedRowsWithLineNumbers) {
  Diagnostics diag;
  Dataset ds = Parse(
      "id,name,gov\n"
      "1,Ali,cairo\n"
      "2,,cairo\n"
      "3,Omar\n"
      "1,Duplicate,giza\n"
      "4,Hassan,giza\n",
      {}, &diag);
  ASSERT_EQ(ds.records.size(), 2u);
  EXPECT_EQ(ds.records[1].id, "4");
  EXPECT_EQ(diag.Count(ErrorCode::kMalformedRow), 3u);
  EXPECT_NE(diag.entries()[0].message.find("line 3"), std::string::npos);
}

TEST(ParseDatasetTest, Errors) {
  try {
    Parse("id,fullname\n1,Ali\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingColumn);
  }
  try {
    Parse("id,name\n1,\xC3\x28\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEncodingError);
  }
}

TEST(IngestTest, PicksDelimiterFromExtension) {
  testing::TempDir dir;
  DatasetDescriptor d;
  d.path = dir.Write("people.tsv", "id\tname\n7\tAli, Omar\n");
  Dataset ds = Ingest(d);
  ASSERT_EQ(ds.records.size(), 1u);
  EXPECT_EQ(ds.records[0].name, "Ali, Omar");
  d.path = dir.File("missing.csv");
  try {
    Ingest(d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIoError);
  }
}

TEST(ExpertLabelsTest, RoundTrip) {
  std::istringstream in(
      "source_id,dest_ids\n"
      "s1,d1\n"
      "s2,\n"
      "s3,d4;d2\n");
  ExpertLabels labels = ParseExpertLabels(in);
  EXPECT_EQ(labels.at("s1"), (std::set<std::string>{"d1"}));
  EXPECT_TRUE(labels.at("s2").empty());
  EXPECT_EQ(labels.at("s3"), (std::set<std::string>{"d2", "d4"}));
  std::stringstream out;
  WriteExpertLabels(out, labels);
  EXPECT_EQ(ParseExpertLabels(out), labels);
}

TEST(LoadNamePairsTest, ReadsColumns) {
  testing::TempDir dir;
  std::string path =
      dir.Write("pairs.csv", "latin,arabic\nBakir,بكير\nBelal,بلال\n");
  auto pairs = LoadNamePairs(path);
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0], (std::pair<std::string, std::string>{"بكير", "Bakir"}));
}

}  // namespace
}  // namespace namelink
