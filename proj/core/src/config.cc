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

#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <set>

namespace namelink {
namespace {

namespace fs = std::filesystem;

std::string Trim(std::string_view text) {
  size_t begin = text.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return "";
  size_t end = text.find_last_not_of(" \t\r");
  return std::string(text.substr(begin, end - begin + 1));
}

[[noreturn]] void Fail(size_t line, const std::string& message) {
  throw Error(ErrorCode::kConfigError,
              "config line " + std::to_string(line) + ": " + message);
}

double ToDouble(const std::string& value, size_t line) {
  double out = 0.0;
  auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    Fail(line, "expected a number, got '" + value + "'");
  }
  return out;
}

long ToInteger(const std::string& value, size_t line) {
  long out = 0;
  auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size() || out < 0) {
    Fail(line, "expected a non-negative integer, got '" + value + "'");
  }
  return out;
}

bool ToBool(const std::string& value, size_t line) {
  if (value == "true" || value == "yes" || value == "1") return true;
  if (value == "false" || value == "no" || value == "0") return false;
  Fail(line, "expected true or false, got '" + value + "'");
}

char ToDelimiter(const std::string& value, size_t line) {
  if (value == "tab" || value == "\\t") return '\t';
  if (value == "comma" || value == ",") return ',';
  if (value == "auto") return 0;
  Fail(line, "delimiter must be tab, comma or auto");
}

std::vector<std::string> SplitList(const std::string& value) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start <= value.size()) {
    size_t end = value.find(',', start);
    if (end == std::string::npos) end = value.size();
    std::string item = Trim(std::string_view(value).substr(start, end - start));
    if (!item.empty()) out.push_back(std::move(item));
    start = end + 1;
  }
  return out;
}

template <typename Fn>
auto Convert(Fn&& fn, size_t line) {
  try {
    return fn();
  } catch (const Error& e) {
    Fail(line, e.what());
  }
}

}  // namespace

PipelineConfig ParseConfig(std::istream& in, const std::string& base_dir) {
  PipelineConfig c;
  auto path = [&](const std::string& value) {
    fs::path p(value);
    if (p.is_relative() && !base_dir.empty()) p = fs::path(base_dir) / p;
    return p.lexically_normal().string();
  };
  using Setter = std::function<void(const std::string&, size_t)>;
  auto dataset_keys = [&](const std::string& prefix, DatasetDescriptor& d) {
    return std::map<std::string, Setter>{
        {prefix + ".path",
         [&](const std::string& v, size_t) { d.path = path(v); }},
        {prefix + ".id_column",
         [&](const std::string& v, size_t) { d.id_column = v; }},
        {prefix + ".name_column",
         [&](const std::string& v, size_t) { d.name_column = v; }},
        {prefix + ".order",
         [&](const std::string& v, size_t l) {
           d.order = Convert([&] { return ParseNameOrder(v); }, l);
         }},
        {prefix + ".delimiter",
         [&](const std::string& v, size_t l) { d.delimiter = ToDelimiter(v, l); }},
    };
  };
  std::map<std::string, Setter> setters = {
      {"block",
       [&](const std::string& v, size_t) { c.block = SplitList(v); }},
      {"dictionary.path",
       [&](const std::string& v, size_t) { c.dictionary_path = path(v); }},
      {"dictionary.strategy",
       [&](const std::string& v, size_t l) {
         c.dictionary_strategy =
             Convert([&] { return ParseDictionaryStrategy(v); }, l);
       }},
      {"dictionary.pairs",
       [&](const std::string& v, size_t) { c.dictionary_pairs = path(v); }},
      {"dictionary.arabic_column",
       [&](const std::string& v, size_t) { c.pairs_arabic_column = v; }},
      {"dictionary.latin_column",
       [&](const std::string& v, size_t) { c.pairs_latin_column = v; }},
      {"dictionary.latin_order",
       [&](const std::string& v, size_t l) {
         c.pairs_latin_order = Convert([&] { return ParseNameOrder(v); }, l);
       }},
      {"dictionary.edits",
       [&](const std::string& v, size_t) { c.dictionary_edits = path(v); }},
      {"prefixes.path",
       [&](const std::string& v, size_t) { c.prefixes_path = path(v); }},
      {"normalize.waw_hamza_to_alef",
       [&](const std::string& v, size_t l) {
         c.analyzer.normalize.waw_hamza_to_alef = ToBool(v, l);
       }},
      {"normalize.drop_final_hamza",
       [&](const std::string& v, size_t l) {
         c.analyzer.normalize.drop_final_hamza = ToBool(v, l);
       }},
      {"parse.merge_bare_articles",
       [&](const std::string& v, size_t l) {
         c.analyzer.parse.merge_bare_articles = ToBool(v, l);
       }},
      {"match.threshold",
       [&](const std::string& v, size_t l) {
         c.match.match_threshold = ToDouble(v, l);
       }},
      {"match.floor",
       [&](const std::string& v, size_t l) { c.match.floor = ToDouble(v, l); }},
      {"match.max_edit_distance",
       [&](const std::string& v, size_t l) {
         c.match.max_edit_distance = static_cast<size_t>(ToInteger(v, l));
       }},
      {"match.relax_order",
       [&](const std::string& v, size_t l) {
         c.match.relax_order = Convert([&] { return ParseRelaxOrder(v); }, l);
       }},
      {"match.verify_reverse",
       [&](const std::string& v, size_t l) {
         c.match.verify_reverse = ToBool(v, l);
       }},
      {"match.threads",
       [&](const std::string& v, size_t l) {
         c.match.threads = static_cast<size_t>(ToInteger(v, l));
       }},
      {"output.results",
       [&](const std::string& v, size_t) { c.results_path = path(v); }},
      {"output.report",
       [&](const std::string& v, size_t) { c.report_path = path(v); }},
      {"output.review_queue",
       [&](const std::string& v, size_t) { c.review_queue_path = path(v); }},
      {"expert.labels",
       [&](const std::string& v, size_t) { c.expert_labels = path(v); }},
      {"review.host",
       [&](const std::string& v, size_t) { c.review_host = v; }},
      {"review.port",
       [&](const std::string& v, size_t l) {
         c.review_port = static_cast<int>(ToInteger(v, l));
       }},
      {"review.journal",
       [&](const std::string& v, size_t) { c.review_journal = path(v); }},
      {"review.static_dir",
       [&](const std::string& v, size_t) { c.review_static_dir = path(v); }},
  };
  setters.merge(dataset_keys("source", c.source));
  setters.merge(dataset_keys("destination", c.destination));

  std::set<std::string> seen;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string text = Trim(line);
    if (text.empty() || text[0] == '#') continue;
    size_t eq = text.find('=');
    if (eq == std::string::npos) Fail(line_no, "expected key = value");
    std::string key = Trim(std::string_view(text).substr(0, eq));
    std::string value = Trim(std::string_view(text).substr(eq + 1));
    auto it = setters.find(key);
    if (it == setters.end()) Fail(line_no, "unknown key '" + key + "'");
    if (!seen.insert(key).second) Fail(line_no, "duplicate key '" + key + "'");
    if (value.empty()) Fail(line_no, "empty value for '" + key + "'");
    it->second(value, line_no);
  }
  ValidateConfig(c);
  return c;
}

PipelineConfig LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kConfigError, "cannot read config " + path);
  return ParseConfig(in, fs::path(path).parent_path().string());
}

void ValidateConfig(const PipelineConfig& c) {
  auto fail = [](const std::string& message) {
    throw Error(ErrorCode::kConfigError, message);
  };
  if (c.match.match_threshold < 0.0 || c.match.match_threshold > 1.0) {
    fail("match.threshold must be in [0, 1]");
  }
  if (c.match.floor < 0.0 || c.match.floor > 1.0) {
    fail("match.floor must be in [0, 1]");
  }
  if (c.match.floor > c.match.match_threshold) {
    fail("match.floor must not exceed match.threshold");
  }
  if (c.review_port < 0 || c.review_port > 65535) {
    fail("review.port must be in [0, 65535]");
  }
}

}  // namespace namelink
