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

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include "namelink/unicode.h"

namespace namelink {
namespace {

char DelimiterFor(const DatasetDescriptor& descriptor) {
  if (descriptor.delimiter != 0) return descriptor.delimiter;
  const std::string& p = descriptor.path;
  if (p.size() >= 4 && p.compare(p.size() - 4, 4, ".tsv") == 0) return '\t';
  return ',';
}

char DelimiterForPath(const std::string& path) {
  DatasetDescriptor d;
  d.path = path;
  return DelimiterFor(d);
}

std::string Trim(std::string_view text) {
  size_t begin = text.find_first_not_of(" \t");
  if (begin == std::string_view::npos) return "";
  size_t end = text.find_last_not_of(" \t");
  return std::string(text.substr(begin, end - begin + 1));
}

void CheckUtf8(const std::vector<std::string>& row, size_t line) {
  for (const std::string& cell : row) {
    if (!IsValidUtf8(cell)) {
      throw Error(ErrorCode::kEncodingError,
                  "line " + std::to_string(line) + ": invalid UTF-8");
    }
  }
}

size_t ColumnIndex(const std::vector<std::string>& header,
                   const std::string& name, const std::string& source) {
  auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) {
    throw Error(ErrorCode::kMissingColumn,
                "column '" + name + "' not found in " + source);
  }
  return static_cast<size_t>(it - header.begin());
}

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  return in;
}

}  // namespace

DelimitedReader::DelimitedReader(std::istream& in, char delimiter)
    : in_(in), delimiter_(delimiter) {}

bool DelimitedReader::Next(std::vector<std::string>* row, size_t* line) {
  row->clear();
  if (first_) {
    first_ = false;
    if (in_.peek() == 0xEF) {
      char bom[3];
      in_.read(bom, 3);
      if (!(static_cast<unsigned char>(bom[1]) == 0xBB &&
            static_cast<unsigned char>(bom[2]) == 0xBF)) {
        throw Error(ErrorCode::kEncodingError, "line 1: invalid UTF-8");
      }
    }
  }
  // Skip blank lines between records.
  while (in_.peek() == '\n' || in_.peek() == '\r') {
    if (in_.get() == '\n') ++line_;
  }
  if (in_.peek() == std::char_traits<char>::eof()) return false;
  *line = line_;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  char c;
  while (in_.get(c)) {
    if (quoted) {
      if (c == '"') {
        if (in_.peek() == '"') {
          in_.get();
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line_;
        field += c;
      }
      continue;
    }
    if (c == '"' && !was_quoted && field.empty()) {
      quoted = true;
      was_quoted = true;
    } else if (c == delimiter_) {
      row->push_back(std::move(field));
      field.clear();
      was_quoted = false;
    } else if (c == '\n') {
      ++line_;
      break;
    } else if (c != '\r') {
      field += c;
    }
  }
  if (quoted) {
    throw Error(ErrorCode::kMalformedRow,
                "line " + std::to_string(*line) + ": unterminated quote");
  }
  row->push_back(std::move(field));
  return true;
}

Dataset ParseDataset(std::istream& in, const DatasetDescriptor& descriptor,
                     Diagnostics* diag) {
  DelimitedReader reader(in, DelimiterFor(descriptor));
  Dataset dataset;
  dataset.order = descriptor.order;
  std::vector<std::string> row;
  size_t line = 0;
  const std::string source =
      descriptor.path.empty() ? std::string("dataset") : descriptor.path;
  if (!reader.Next(&row, &line)) {
    throw Error(ErrorCode::kMissingColumn, source + " has no header row");
  }
  CheckUtf8(row, line);
  for (std::string& cell : row) dataset.columns.push_back(Trim(cell));
  const size_t id_col = ColumnIndex(dataset.columns, descriptor.id_column, source);
  const size_t name_col =
      ColumnIndex(dataset.columns, descriptor.name_column, source);

  std::set<std::string> seen;
  while (reader.Next(&row, &line)) {
    CheckUtf8(row, line);
    auto skip = [&](const std::string& why) {
      Warn(diag, ErrorCode::kMalformedRow,
           source + " line " + std::to_string(line) + ": " + why);
    };
    if (row.size() != dataset.columns.size()) {
      skip("expected " + std::to_string(dataset.columns.size()) +
           " fields, found " + std::to_string(row.size()));
      continue;
    }
    DatasetRecord record;
    record.id = Trim(row[id_col]);
    record.name = Trim(row[name_col]);
    record.line = line;
    if (record.id.empty()) {
      skip("missing id");
      continue;
    }
    if (record.name.empty()) {
      skip("missing name");
      continue;
    }
    if (!seen.insert(record.id).second) {
      skip("duplicate id '" + record.id + "'");
      continue;
    }
    for (size_t i = 0; i < row.size(); ++i) {
      record.fields[dataset.columns[i]] = Trim(row[i]);
    }
    dataset.records.push_back(std::move(record));
  }
  return dataset;
}

Dataset Ingest(const DatasetDescriptor& descriptor, Diagnostics* diag) {
  std::ifstream in = OpenInput(descriptor.path);
  return ParseDataset(in, descriptor, diag);
}

ExpertLabels ParseExpertLabels(std::istream& in, Diagnostics* diag) {
  DelimitedReader reader(in, ',');
  ExpertLabels labels;
  std::vector<std::string> row;
  size_t line = 0;
  bool first = true;
  while (reader.Next(&row, &line)) {
    CheckUtf8(row, line);
    if (first && Trim(row[0]) == "source_id") {
      first = false;
      continue;
    }
    first = false;
    std::string id = Trim(row[0]);
    if (row.size() > 2 || id.empty()) {
      Warn(diag, ErrorCode::kMalformedRow,
           "labels line " + std::to_string(line) +
               ": expected source_id,dest_ids");
      continue;
    }
    std::set<std::string> dests;
    if (row.size() == 2) {
      std::string_view list = row[1];
      size_t start = 0;
      while (start <= list.size()) {
        size_t end = list.find(';', start);
        if (end == std::string_view::npos) end = list.size();
        std::string dest = Trim(list.substr(start, end - start));
        if (!dest.empty()) dests.insert(std::move(dest));
        start = end + 1;
      }
    }
    if (!labels.emplace(id, std::move(dests)).second) {
      Warn(diag, ErrorCode::kMalformedRow,
           "labels line " + std::to_string(line) + ": duplicate source '" +
               id + "'");
    }
  }
  return labels;
}

ExpertLabels LoadExpertLabels(const std::string& path, Diagnostics* diag) {
  std::ifstream in = OpenInput(path);
  return ParseExpertLabels(in, diag);
}

void WriteExpertLabels(std::ostream& out, const ExpertLabels& labels) {
  out << "source_id,dest_ids\n";
  for (const auto& [source, dests] : labels) {
    out << source << ',';
    bool first = true;
    for (const std::string& d : dests) {
      if (!first) out << ';';
      out << d;
      first = false;
    }
    out << '\n';
  }
}

std::vector<std::pair<std::string, std::string>> LoadNamePairs(
    const std::string& path, const std::string& arabic_column,
    const std::string& latin_column, Diagnostics* diag) {
  std::ifstream in = OpenInput(path);
  DelimitedReader reader(in, DelimiterForPath(path));
  std::vector<std::string> row;
  size_t line = 0;
  if (!reader.Next(&row, &line)) {
    throw Error(ErrorCode::kMissingColumn, path + " has no header row");
  }
  CheckUtf8(row, line);
  std::vector<std::string> header;
  for (const std::string& cell : row) header.push_back(Trim(cell));
  const size_t ar = ColumnIndex(header, arabic_column, path);
  const size_t la = ColumnIndex(header, latin_column, path);
  std::vector<std::pair<std::string, std::string>> pairs;
  while (reader.Next(&row, &line)) {
    CheckUtf8(row, line);
    if (row.size() != header.size() || Trim(row[ar]).empty() ||
        Trim(row[la]).empty()) {
      Warn(diag, ErrorCode::kMalformedRow,
           path + " line " + std::to_string(line) + ": incomplete pair");
      continue;
    }
    pairs.emplace_back(Trim(row[ar]), Trim(row[la]));
  }
  return pairs;
}

}  // namespace namelink
