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

#ifndef NAMELINK_DATASET_IO_H_
#define NAMELINK_DATASET_IO_H_

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "namelink/error.h"
#include "namelink/parse.h"

namespace namelink {

struct DatasetRecord {
  std::string id;
  std::string name;  // raw full name
  // Every column of the row, including the id and name columns.
  std::map<std::string, std::string> fields;
  size_t line = 0;
};

struct DatasetDescriptor {
  std::string path;
  std::string id_column = "id";
  std::string name_column = "name";
  NameOrder order = NameOrder::kFirstNameFirst;
  // 0 picks tab for *.tsv and comma otherwise.
  char delimiter = 0;
};

struct Dataset {
  std::vector<std::string> columns;
  std::vector<DatasetRecord> records;
  NameOrder order = NameOrder::kFirstNameFirst;
};

// RFC 4180 style reader: quoted fields may hold delimiters, doubled quotes
// and newlines. A leading UTF-8 byte order mark is skipped. Each row carries
// the line number it started on.
class DelimitedReader {
 public:
  DelimitedReader(std::istream& in, char delimiter);

  // Returns false at end of input. Throws kMalformedRow on an unterminated
  // quote.
  bool Next(std::vector<std::string>* row, size_t* line);

 private:
  std::istream& in_;
  char delimiter_;
  size_t line_ = 1;
  bool first_ = true;
};

// Reads a header-led CSV/TSV. Rows with the wrong field count, a missing
// id or name, or a duplicate id are skipped and reported as kMalformedRow.
// Throws kMissingColumn, kEncodingError.
Dataset ParseDataset(std::istream& in, const DatasetDescriptor& descriptor,
                     Diagnostics* diag = nullptr);
// Also throws kIoError.
Dataset Ingest(const DatasetDescriptor& descriptor,
               Diagnostics* diag = nullptr);

// source id -> destination ids the expert accepted (empty for no match).
using ExpertLabels = std::map<std::string, std::set<std::string>>;

// CSV `source_id,dest_ids` with dest ids separated by ';'. A header row
// starting with "source_id" is optional.
ExpertLabels ParseExpertLabels(std::istream& in, Diagnostics* diag = nullptr);
ExpertLabels LoadExpertLabels(const std::string& path,
                              Diagnostics* diag = nullptr);
void WriteExpertLabels(std::ostream& out, const ExpertLabels& labels);

// Header-led CSV/TSV of (arabic, latin) full-name pairs used to build a
// dictionary.
std::vector<std::pair<std::string, std::string>> LoadNamePairs(
    const std::string& path, const std::string& arabic_column = "arabic",
    const std::string& latin_column = "latin", Diagnostics* diag = nullptr);

}  // namespace namelink

#endif  // NAMELINK_DATASET_IO_H_
