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

#include "namelink/metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace namelink {
namespace {

using nlohmann::json;

double N(const ConfusionMatrix& m) {
  uint64_t n = m.Total();
  if (n == 0) throw Error(ErrorCode::kEmptyMatrix, "confusion matrix is empty");
  return static_cast<double>(n);
}

double Ratio(double numerator, double denominator, const char* what) {
  if (denominator == 0.0) {
    throw Error(ErrorCode::kZeroDenominator,
                std::string(what) + " has a zero denominator");
  }
  return numerator / denominator;
}

template <typename Fn>
auto Defined(Fn&& fn) -> std::optional<decltype(fn())> {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kZeroDenominator) throw;
    return std::nullopt;
  }
}

json OptionalNumber(const std::optional<double>& value) {
  return value ? json(*value) : json(nullptr);
}

json OptionalPercent(const std::optional<double>& value) {
  return value ? json(FormatPercent(*value)) : json(nullptr);
}

}  // namespace

void ConfusionMatrix::Add(size_t expert, size_t machine, uint64_t count) {
  if (count == 0) return;
  cells_[{expert, machine}] += count;
}

uint64_t ConfusionMatrix::Count(size_t expert, size_t machine) const {
  auto it = cells_.find({expert, machine});
  return it == cells_.end() ? 0 : it->second;
}

uint64_t ConfusionMatrix::CellSum() const {
  uint64_t sum = 0;
  for (const auto& [cell, count] : cells_) sum += count;
  return sum;
}

uint64_t ConfusionMatrix::Total() const {
  return declared_total_.value_or(CellSum());
}

size_t ConfusionMatrix::MaxExpert() const {
  size_t max = 0;
  for (const auto& [cell, count] : cells_) max = std::max(max, cell.first);
  return max;
}

size_t ConfusionMatrix::MaxMachine() const {
  size_t max = 0;
  for (const auto& [cell, count] : cells_) max = std::max(max, cell.second);
  return max;
}

std::map<size_t, uint64_t> ConfusionMatrix::RegionC() const {
  std::map<size_t, uint64_t> out;
  for (const auto& [cell, count] : cells_) {
    if (cell.first == 1 && cell.second >= 2) out[cell.second] += count;
  }
  return out;
}

std::map<size_t, uint64_t> ConfusionMatrix::RegionD() const {
  std::map<size_t, uint64_t> out;
  for (const auto& [cell, count] : cells_) {
    if (cell.first == 0 && cell.second >= 2) out[cell.second] += count;
  }
  return out;
}

std::map<size_t, uint64_t> ConfusionMatrix::RegionA() const {
  std::map<size_t, uint64_t> out;
  for (const auto& [cell, count] : cells_) {
    if (cell.second == 1 && cell.first >= 2) out[cell.first] += count;
  }
  return out;
}

std::map<size_t, uint64_t> ConfusionMatrix::RegionB() const {
  std::map<size_t, uint64_t> out;
  for (const auto& [cell, count] : cells_) {
    if (cell.second == 0 && cell.first >= 2) out[cell.first] += count;
  }
  return out;
}

ConfusionMatrix BuildMatrix(const std::vector<MatchDecision>& machine,
                            const ExpertLabels& expert) {
  ConfusionMatrix m;
  std::set<std::string> seen;
  for (const MatchDecision& decision : machine) {
    auto it = expert.find(decision.source_id);
    if (it == expert.end()) {
      throw Error(ErrorCode::kKeyMismatch,
                  "no expert label for source '" + decision.source_id + "'");
    }
    if (!seen.insert(decision.source_id).second) {
      throw Error(ErrorCode::kKeyMismatch,
                  "duplicate machine decision for '" + decision.source_id +
                      "'");
    }
    const size_t expert_k = it->second.size();
    const size_t machine_k = decision.Multiplicity();
    if (expert_k == 1 && machine_k == 1 &&
        decision.DestIds() != it->second) {
      m.Add(0, 1);
      m.add_mismatched_single(1);
      continue;
    }
    m.Add(expert_k, machine_k);
  }
  if (seen.size() != expert.size()) {
    for (const auto& [id, dests] : expert) {
      if (seen.count(id) == 0) {
        throw Error(ErrorCode::kKeyMismatch,
                    "no machine decision for source '" + id + "'");
      }
    }
  }
  return m;
}

double TruePositiveProportion(const ConfusionMatrix& m) {
  return static_cast<double>(m.Count(1, 1)) / N(m);
}

double FalsePositiveProportion(const ConfusionMatrix& m) {
  return static_cast<double>(m.Count(0, 1)) / N(m);
}

double VerifiedTrueNegativeProportion(const ConfusionMatrix& m) {
  return static_cast<double>(m.Count(0, 0)) / N(m);
}

double FalseNegativeProportion(const ConfusionMatrix& m) {
  return static_cast<double>(m.Count(1, 0)) / N(m);
}

double Effectiveness(const ConfusionMatrix& m) {
  N(m);
  double diagonal = 0.0;
  double off = 0.0;
  for (const auto& [cell, count] : m.cells()) {
    const auto [i, k] = cell;
    if (i == k) {
      diagonal += static_cast<double>(count);
    } else {
      off += static_cast<double>(i > k ? i - k : k - i) *
             static_cast<double>(count);
    }
  }
  if (diagonal + off == 0.0) {
    throw Error(ErrorCode::kEmptyMatrix, "confusion matrix is empty");
  }
  return diagonal / (diagonal + off);
}

double Etpap(const ConfusionMatrix& m) {
  const double n = N(m);
  double sum = 0.0;
  for (const auto& [k, count] : m.RegionC()) {
    sum += static_cast<double>(count) / static_cast<double>(k);
  }
  return sum / n;
}

double Otpa(const ConfusionMatrix& m) {
  return TruePositiveProportion(m) + Etpap(m);
}

double Emfi(const ConfusionMatrix& m) {
  const double n = N(m);
  double sum = 0.0;
  for (const auto& [k, count] : m.RegionC()) {
    sum += static_cast<double>(k - 1) * static_cast<double>(count) /
           static_cast<double>(k);
  }
  return sum / n;
}

double Emfp(const ConfusionMatrix& m) {
  double weighted = 0.0;
  double total = 0.0;
  for (const auto& [k, count] : m.RegionD()) {
    weighted += static_cast<double>(k) * static_cast<double>(count);
    total += static_cast<double>(count);
  }
  return total == 0.0 ? 0.0 : weighted / total;
}

double Emttp(const ConfusionMatrix& m) {
  double weighted = 0.0;
  double total = 0.0;
  for (const auto& [k, count] : m.RegionA()) {
    weighted += static_cast<double>(k - 1) * static_cast<double>(count) /
                static_cast<double>(k);
    total += static_cast<double>(count);
  }
  return total == 0.0 ? 0.0 : weighted / total;
}

double Emfn(const ConfusionMatrix& m) {
  double weighted = 0.0;
  double total = 0.0;
  for (const auto& [k, count] : m.RegionB()) {
    weighted += static_cast<double>(k) * static_cast<double>(count);
    total += static_cast<double>(count);
  }
  return total == 0.0 ? 0.0 : weighted / total;
}

RateTriple ClassicMetrics(double tp, double tn, double fp, double fn) {
  RateTriple r;
  r.accuracy = Ratio(tp + tn, tp + tn + fp + fn, "accuracy");
  r.precision = Ratio(tp, tp + fp, "precision");
  r.recall = Ratio(tp, tp + fn, "recall");
  return r;
}

RateTriple ProposedMetrics(const ConfusionMatrix& m) {
  const double tpp = TruePositiveProportion(m);
  const double vtnp = VerifiedTrueNegativeProportion(m);
  const double fpp = FalsePositiveProportion(m);
  const double fnp = FalseNegativeProportion(m);
  const double etpap = Etpap(m);
  const double emfi = Emfi(m);
  RateTriple r;
  r.accuracy = Ratio(tpp + vtnp + etpap, tpp + vtnp + etpap + fpp + emfi + fnp,
                     "proposed accuracy");
  r.precision =
      Ratio(tpp + etpap, tpp + etpap + fpp + emfi + fnp, "proposed precision");
  r.recall = r.precision;
  return r;
}

MetricsReport ComputeReport(const ConfusionMatrix& m) {
  MetricsReport r;
  r.n = static_cast<uint64_t>(N(m));
  r.tpp = TruePositiveProportion(m);
  r.fpp = FalsePositiveProportion(m);
  r.vtnp = VerifiedTrueNegativeProportion(m);
  r.fnp = FalseNegativeProportion(m);
  r.effectiveness = Effectiveness(m);
  r.etpap = Etpap(m);
  r.otpa = Otpa(m);
  r.emfi = Emfi(m);
  r.emfp = Emfp(m);
  r.emttp = Emttp(m);
  r.emfn = Emfn(m);
  std::optional<RateTriple> proposed =
      Defined([&] { return ProposedMetrics(m); });
  if (proposed) {
    r.proposed_accuracy = proposed->accuracy;
    r.proposed_precision = proposed->precision;
    r.proposed_recall = proposed->recall;
  }
  const double tp = static_cast<double>(m.Count(1, 1));
  const double tn = static_cast<double>(m.Count(0, 0));
  const double fp = static_cast<double>(m.Count(0, 1));
  const double fn = static_cast<double>(m.Count(1, 0));
  r.classic_accuracy =
      Defined([&] { return Ratio(tp + tn, tp + tn + fp + fn, "accuracy"); });
  r.classic_precision = Defined([&] { return Ratio(tp, tp + fp, "precision"); });
  r.classic_recall = Defined([&] { return Ratio(tp, tp + fn, "recall"); });
  return r;
}

std::string FormatPercent(double proportion) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f%%", proportion * 100.0);
  return buffer;
}

std::string MatrixToJson(const ConfusionMatrix& m) {
  json cells = json::array();
  for (const auto& [cell, count] : m.cells()) {
    cells.push_back(
        {{"expert", cell.first}, {"machine", cell.second}, {"count", count}});
  }
  json out = {{"cells", cells},
              {"cell_sum", m.CellSum()},
              {"mismatched_single", m.mismatched_single()}};
  out["total"] = m.Total();
  if (m.declared_total()) out["declared_total"] = *m.declared_total();
  return out.dump();
}

ConfusionMatrix MatrixFromJson(const std::string& text) {
  try {
    json doc = json::parse(text);
    const json& matrix = doc.contains("matrix") ? doc.at("matrix") : doc;
    ConfusionMatrix m;
    for (const json& cell : matrix.at("cells")) {
      m.Add(cell.at("expert").get<size_t>(), cell.at("machine").get<size_t>(),
            cell.at("count").get<uint64_t>());
    }
    if (matrix.contains("declared_total")) {
      m.set_declared_total(matrix.at("declared_total").get<uint64_t>());
    } else if (!matrix.contains("cell_sum") && matrix.contains("total")) {
      m.set_declared_total(matrix.at("total").get<uint64_t>());
    }
    if (matrix.contains("mismatched_single")) {
      m.add_mismatched_single(matrix.at("mismatched_single").get<uint64_t>());
    }
    return m;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedData,
                std::string("bad confusion matrix: ") + e.what());
  }
}

std::string ReportToJson(const MetricsReport& r, const ConfusionMatrix& m) {
  json metrics = {
      {"n", r.n},
      {"tpp", r.tpp},
      {"fpp", r.fpp},
      {"vtnp", r.vtnp},
      {"fnp", r.fnp},
      {"effectiveness", r.effectiveness},
      {"etpap", r.etpap},
      {"otpa", r.otpa},
      {"emfi", r.emfi},
      {"emfp", r.emfp},
      {"emttp", r.emttp},
      {"emfn", r.emfn},
      {"proposed_accuracy", OptionalNumber(r.proposed_accuracy)},
      {"proposed_precision", OptionalNumber(r.proposed_precision)},
      {"proposed_recall", OptionalNumber(r.proposed_recall)},
      {"classic_accuracy", OptionalNumber(r.classic_accuracy)},
      {"classic_precision", OptionalNumber(r.classic_precision)},
      {"classic_recall", OptionalNumber(r.classic_recall)},
  };
  json percent = {
      {"tpp", FormatPercent(r.tpp)},
      {"fpp", FormatPercent(r.fpp)},
      {"vtnp", FormatPercent(r.vtnp)},
      {"fnp", FormatPercent(r.fnp)},
      {"effectiveness", FormatPercent(r.effectiveness)},
      {"etpap", FormatPercent(r.etpap)},
      {"otpa", FormatPercent(r.otpa)},
      {"emfi", FormatPercent(r.emfi)},
      {"emttp", FormatPercent(r.emttp)},
      {"proposed_accuracy", OptionalPercent(r.proposed_accuracy)},
      {"proposed_precision", OptionalPercent(r.proposed_precision)},
      {"proposed_recall", OptionalPercent(r.proposed_recall)},
      {"classic_accuracy", OptionalPercent(r.classic_accuracy)},
      {"classic_precision", OptionalPercent(r.classic_precision)},
      {"classic_recall", OptionalPercent(r.classic_recall)},
  };
  json notes = json::array(
      {"proposed_recall is computed with the proposed_precision formula",
       "a single machine match naming a different destination than the "
       "expert's single choice is counted as a false positive (cell 0,1)",
       "emfp and emfn are mean list lengths, not proportions"});
  json out = {{"matrix", json::parse(MatrixToJson(m))},
              {"metrics", metrics},
              {"percent", percent},
              {"notes", notes}};
  return out.dump(2) + "\n";
}

}  // namespace namelink
