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

#ifndef NAMELINK_METRICS_H_
#define NAMELINK_METRICS_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "namelink/dataset_io.h"
#include "namelink/match_engine.h"

namespace namelink {

// Counts of source records by (expert multiplicity, machine multiplicity).
// Multiplicity 0 is "1..0" (no match), 1 is "1..1", m >= 2 is "1..m".
//
// Regions: C = expert 1, machine >= 2; D = expert 0, machine >= 2;
// A = machine 1, expert >= 2; B = machine 0, expert >= 2.
class ConfusionMatrix {
 public:
  using Cell = std::pair<size_t, size_t>;  // (expert, machine)

  void Add(size_t expert, size_t machine, uint64_t count = 1);
  uint64_t Count(size_t expert, size_t machine) const;
  const std::map<Cell, uint64_t>& cells() const { return cells_; }

  uint64_t CellSum() const;
  // N used as the denominator of the proportions: the declared total when
  // one is set, the cell sum otherwise.
  uint64_t Total() const;
  std::optional<uint64_t> declared_total() const { return declared_total_; }
  void set_declared_total(std::optional<uint64_t> total) {
    declared_total_ = total;
  }

  size_t MaxExpert() const;
  size_t MaxMachine() const;

  // Region rows keyed by the multiplicity that varies within the region
  // (machine for C and D, expert for A and B).
  std::map<size_t, uint64_t> RegionC() const;
  std::map<size_t, uint64_t> RegionD() const;
  std::map<size_t, uint64_t> RegionA() const;
  std::map<size_t, uint64_t> RegionB() const;

  // Single machine matches that named a different destination than the
  // expert's single choice. They are counted in cell (0, 1).
  uint64_t mismatched_single() const { return mismatched_single_; }
  void add_mismatched_single(uint64_t count) { mismatched_single_ += count; }

  bool operator==(const ConfusionMatrix&) const = default;

 private:
  std::map<Cell, uint64_t> cells_;
  std::optional<uint64_t> declared_total_;
  uint64_t mismatched_single_ = 0;
};

// One cell per source record. Throws kKeyMismatch when the machine and
// expert id sets differ.
ConfusionMatrix BuildMatrix(const std::vector<MatchDecision>& machine,
                            const ExpertLabels& expert);

// Each metric throws kEmptyMatrix when the matrix holds no records.
double TruePositiveProportion(const ConfusionMatrix& m);
double FalsePositiveProportion(const ConfusionMatrix& m);
double VerifiedTrueNegativeProportion(const ConfusionMatrix& m);
double FalseNegativeProportion(const ConfusionMatrix& m);

// Diagonal total over diagonal total plus off-diagonal counts weighted by
// their distance from the diagonal.
double Effectiveness(const ConfusionMatrix& m);
// Region C credited at 1/k per k-candidate list, over N.
double Etpap(const ConfusionMatrix& m);
// Tpp + Etpap.
double Otpa(const ConfusionMatrix& m);
// Region C charged (k-1)/k per k-candidate list, over N.
double Emfi(const ConfusionMatrix& m);
// Mean list length in region D; 0 when D is empty.
double Emfp(const ConfusionMatrix& m);
// Mean missed fraction (k-1)/k in region A; 0 when A is empty.
double Emttp(const ConfusionMatrix& m);
// Mean expert multiplicity in region B; 0 when B is empty.
double Emfn(const ConfusionMatrix& m);

struct RateTriple {
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
};

// Textbook ratios. Throws kZeroDenominator.
RateTriple ClassicMetrics(double tp, double tn, double fp, double fn);
// Recall is computed with the same formula as precision.
// Throws kEmptyMatrix, kZeroDenominator.
RateTriple ProposedMetrics(const ConfusionMatrix& m);

struct MetricsReport {
  uint64_t n = 0;
  double tpp = 0.0;
  double fpp = 0.0;
  double vtnp = 0.0;
  double fnp = 0.0;
  double effectiveness = 0.0;
  double etpap = 0.0;
  double otpa = 0.0;
  double emfi = 0.0;
  double emfp = 0.0;
  double emttp = 0.0;
  double emfn = 0.0;
  // Unset when the denominator is zero.
  std::optional<double> proposed_accuracy;
  std::optional<double> proposed_precision;
  std::optional<double> proposed_recall;
  std::optional<double> classic_accuracy;
  std::optional<double> classic_precision;
  std::optional<double> classic_recall;
};

// Throws kEmptyMatrix.
MetricsReport ComputeReport(const ConfusionMatrix& m);

// "61.50%".
std::string FormatPercent(double proportion);

// JSON object with the matrix as (expert, machine, count) triples, the raw
// metric values, their percentages and explanatory notes. Key order and
// number formatting are stable.
std::string ReportToJson(const MetricsReport& report,
                         const ConfusionMatrix& m);

// Reads {"total": N?, "cells": [{"expert": i, "machine": k, "count": c}]}
// or a report written by ReportToJson. Throws kMalformedData.
ConfusionMatrix MatrixFromJson(const std::string& text);
std::string MatrixToJson(const ConfusionMatrix& m);

}  // namespace namelink

#endif  // NAMELINK_METRICS_H_
