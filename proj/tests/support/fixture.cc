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

#include "fixture.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <stdexcept>

namespace namelink::testing {
namespace {

struct Name {
  const char* arabic;
  const char* latin;
};

// Spellings whose plain and combined Soundex codes agree across scripts.
constexpr Name kFirstNames[] = {
    {"محمد", "Mohamed"},  {"أحمد", "Ahmed"},    {"عمر", "Omar"},
    {"محمود", "Mahmoud"}, {"مصطفى", "Mostafa"}, {"يوسف", "Youssef"},
    {"طارق", "Tarek"},    {"كريم", "Karim"},    {"سمير", "Samir"},
    {"هاني", "Hany"},     {"ياسر", "Yasser"},   {"خالد", "Khaled"},
    {"جمال", "Gamal"},    {"وليد", "Walid"},    {"شريف", "Sherif"},
    {"هدى", "Hoda"},      {"نور", "Nour"},      {"رانيا", "Rania"},
    {"نادية", "Nadia"},   {"فاطمة", "Fatma"},   {"باسم", "Bassem"},
    {"حامد", "Hamed"},    {"فاروق", "Farouk"},  {"مجدي", "Magdy"},
};

constexpr Name kFamilyNames[] = {
    {"سلامة", "Salama"},       {"حسن", "Hassan"},   {"حسين", "Hussein"},
    {"سيد", "Sayed"},          {"سعيد", "Said"},    {"سامي", "Samy"},
    {"رضا", "Reda"},           {"فؤاد", "Fouad"},   {"وديع", "Wadie"},
    {"عبده", "Abdo"},          {"بكير", "Bakir"},   {"بلال", "Belal"},
    {"بلتاجي", "Beltagi"},     {"عبد العزيز", "Abdel Aziz"},
    {"عبد الفتاح", "Abdel Fattah"},
};

// First names reachable from an "A" initial, and first names that start
// with the same Arabic letters but are romanized otherwise.
constexpr Name kInitialA[] = {
    {"أحمد", "Ahmed"}, {"أشرف", "Ashraf"}, {"أمل", "Amal"},
    {"عادل", "Adel"},  {"عمرو", "Amr"},
};
constexpr Name kTraps[] = {
    {"إيمان", "Eman"}, {"إسلام", "Islam"}, {"إبراهيم", "Ibrahim"},
    {"عماد", "Emad"},  {"عصام", "Essam"},
};

constexpr const char* kGovernorates[] = {"cairo", "giza", "alexandria",
                                         "aswan"};

class Picker {
 public:
  explicit Picker(uint32_t seed) : engine_(seed) {}
  // Engine output reduced by modulus so the stream is the same with every
  // standard library.
  size_t Below(size_t n) { return static_cast<size_t>(engine_() % n); }
  template <typename T, size_t N>
  const T& From(const T (&items)[N]) {
    return items[Below(N)];
  }

 private:
  std::mt19937 engine_;
};

std::string JoinArabic(const std::vector<Name>& parts) {
  std::string out;
  for (const Name& n : parts) {
    if (!out.empty()) out += ' ';
    out += n.arabic;
  }
  return out;
}

std::string JoinLatin(const std::vector<Name>& parts) {
  std::string out;
  for (const Name& n : parts) {
    if (!out.empty()) out += ' ';
    out += n.latin;
  }
  return out;
}

std::string Id(char prefix, size_t n) {
  char buffer[16];
  std::snprintf(buffer, sizeof(buffer), "%c%03zu", prefix, n);
  return buffer;
}

std::string CsvField(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void WriteRows(const std::vector<FixtureRow>& rows, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "id,name,governorate\n";
  for (const FixtureRow& r : rows) {
    out << r.id << ',' << CsvField(r.name) << ',' << r.governorate << "\n";
  }
}

}  // namespace

LinkageFixture GenerateLinkageFixture(const FixtureOptions& options) {
  const size_t queries = options.exact + options.middle_dropped + options.initial +
                         options.comma_reordered;
  if (queries + options.initial > options.destinations) {
    throw std::invalid_argument("more queries than destination records");
  }
  Picker pick(options.seed);
  LinkageFixture f;
  std::set<std::string> used_names;
  std::vector<std::vector<Name>> dest_parts;

  auto add_dest = [&](std::vector<Name> parts, const std::string& gov) {
    std::string arabic = JoinArabic(parts);
    if (!used_names.insert(arabic).second) return false;
    f.destination.push_back({Id('d', f.destination.size() + 1), arabic, gov});
    dest_parts.push_back(std::move(parts));
    return true;
  };
  auto add_source = [&](const std::string& name, const std::string& gov,
                        QueryKind kind, size_t dest_index) {
    std::string id = Id('s', f.source.size() + 1);
    f.source.push_back({id, name, gov});
    f.truth[id] = f.destination[dest_index].id;
    f.kinds[id] = kind;
    return id;
  };
  auto random_parts = [&](size_t family_count) {
    std::vector<Name> parts{pick.From(kFirstNames)};
    for (size_t i = 0; i < family_count; ++i) {
      parts.push_back(pick.From(kFamilyNames));
    }
    return parts;
  };

  // Initial-letter cases first: truth and trap share middle and last names.
  for (size_t i = 0; i < options.initial; ++i) {
    const std::string gov = kGovernorates[pick.Below(4)];
    for (;;) {
      std::vector<Name> rest = {pick.From(kFamilyNames),
                                pick.From(kFamilyNames)};
      std::vector<Name> truth{kInitialA[i % std::size(kInitialA)]};
      std::vector<Name> trap{kTraps[i % std::size(kTraps)]};
      truth.insert(truth.end(), rest.begin(), rest.end());
      trap.insert(trap.end(), rest.begin(), rest.end());
      if (used_names.count(JoinArabic(truth)) ||
          used_names.count(JoinArabic(trap))) {
        continue;
      }
      add_dest(truth, gov);
      size_t truth_index = f.destination.size() - 1;
      add_dest(trap, gov);
      std::string latin = "A. " + JoinLatin(rest);
      std::string id =
          add_source(latin, gov, QueryKind::kInitial, truth_index);
      f.traps[id] = f.destination.back().id;
      break;
    }
  }

  while (f.destination.size() < options.destinations) {
    add_dest(random_parts(1 + pick.Below(3)),
             kGovernorates[pick.Below(4)]);
  }

  // Plain destinations (no trap partners) in a shuffled order.
  std::vector<size_t> order;
  for (size_t i = 2 * options.initial; i < f.destination.size(); ++i) {
    order.push_back(i);
  }
  for (size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[pick.Below(i)]);
  }
  size_t next = 0;
  auto take = [&](size_t min_parts) {
    while (next < order.size()) {
      size_t d = order[next++];
      if (dest_parts[d].size() >= min_parts) return d;
    }
    throw std::runtime_error("fixture ran out of destination records");
  };

  for (size_t i = 0; i < options.exact; ++i) {
    size_t d = take(2);
    add_source(JoinLatin(dest_parts[d]), f.destination[d].governorate,
               QueryKind::kExact, d);
  }
  for (size_t i = 0; i < options.middle_dropped; ++i) {
    size_t d = take(2);
    std::vector<Name> parts = dest_parts[d];
    std::set<std::string> present;
    for (const Name& n : parts) present.insert(n.arabic);
    Name extra = pick.From(kFamilyNames);
    while (present.count(extra.arabic)) extra = pick.From(kFamilyNames);
    parts.insert(parts.begin() + 1, extra);
    add_source(JoinLatin(parts), f.destination[d].governorate,
               QueryKind::kMiddleDropped, d);
  }
  for (size_t i = 0; i < options.comma_reordered; ++i) {
    size_t d = take(2);
    const std::vector<Name>& parts = dest_parts[d];
    std::string name = std::string(parts.back().latin) + ", " +
                       JoinLatin({parts.begin(), parts.end() - 1});
    add_source(name, f.destination[d].governorate,
               QueryKind::kCommaReordered, d);
  }

  // Dictionary training data: every vocabulary entry appears in some pair.
  std::vector<Name> vocabulary(std::begin(kFirstNames), std::end(kFirstNames));
  vocabulary.insert(vocabulary.end(), std::begin(kFamilyNames),
                    std::end(kFamilyNames));
  vocabulary.insert(vocabulary.end(), std::begin(kInitialA),
                    std::end(kInitialA));
  vocabulary.insert(vocabulary.end(), std::begin(kTraps), std::end(kTraps));
  for (size_t i = 0; i < vocabulary.size(); i += 3) {
    std::vector<Name> parts;
    for (size_t j = i; j < std::min(i + 3, vocabulary.size()); ++j) {
      parts.push_back(vocabulary[j]);
    }
    f.training_pairs.emplace_back(JoinArabic(parts), JoinLatin(parts));
  }
  return f;
}

void WriteLinkageFixture(const LinkageFixture& fixture,
                         const std::string& dir) {
  WriteRows(fixture.destination, dir + "/destination.csv");
  WriteRows(fixture.source, dir + "/source.csv");
  {
    std::ofstream out(dir + "/pairs.csv", std::ios::binary);
    out << "arabic,latin\n";
    for (const auto& [arabic, latin] : fixture.training_pairs) {
      out << CsvField(arabic) << ',' << CsvField(latin) << "\n";
    }
  }
  std::ofstream out(dir + "/truth.csv", std::ios::binary);
  out << "source_id,dest_ids\n";
  for (const auto& [source, dest] : fixture.truth) {
    out << source << ',' << dest << "\n";
  }
}

PipelineConfig FixtureConfig(const std::string& dir) {
  PipelineConfig config;
  config.source.path = dir + "/source.csv";
  config.source.order = NameOrder::kAuto;
  config.destination.path = dir + "/destination.csv";
  config.block = {"governorate"};
  config.dictionary_pairs = dir + "/pairs.csv";
  config.dictionary_path = dir + "/dictionary.tsv";
  config.results_path = dir + "/results.json";
  config.review_queue_path = dir + "/review_queue.json";
  config.expert_labels = dir + "/truth.csv";
  config.report_path = dir + "/report.json";
  return config;
}

FixtureScore ScoreDecisions(const LinkageFixture& fixture,
                            const std::vector<MatchDecision>& decisions) {
  FixtureScore score;
  score.planted = fixture.truth.size();
  score.traps = fixture.traps.size();
  std::map<std::string, const MatchDecision*> by_id;
  for (const MatchDecision& d : decisions) by_id[d.source_id] = &d;
  for (const auto& [source, dest] : fixture.truth) {
    auto it = by_id.find(source);
    bool found = false;
    if (it != by_id.end()) {
      const MatchDecision& d = *it->second;
      for (const Candidate& c : d.candidates) {
        if (c.dest_id == dest && c.relax_level <= 2) found = true;
      }
      if (d.outcome == Outcome::kMatch && d.candidates[0].dest_id == dest) {
        ++score.matched;
      }
    }
    if (found) {
      ++score.recovered;
    } else {
      ++score.missed_by_kind[fixture.kinds.at(source)];
    }
  }
  for (const auto& [source, trap] : fixture.traps) {
    auto it = by_id.find(source);
    if (it != by_id.end() && it->second->DestIds().count(trap)) {
      ++score.traps_kept;
    }
  }
  return score;
}

}  // namespace namelink::testing
