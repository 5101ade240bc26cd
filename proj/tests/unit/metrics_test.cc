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

#include <gtest/gtest.h>

#include "json.hpp"
#include "reference_data.h"

namespace namelink {
namespace {

// Hand summation over the published cells, kept separate from the library.
constexpr double kN = 1000.0;
constexpr double kRegionCCredit = 38.0 / 2 + 15.0 / 3 + 4.0 / 4 + 1.0 / 8 +
                                  1.0 / 11;

TEST(ConfusionMatrixTest, CountsAndRegions) {
  ConfusionMatrix m = testing::TransliteratedRunMatrix();
  EXPECT_EQ(m.CellSum(), 973u);
  EXPECT_EQ(m.Total(), 1000u);
  EXPECT_EQ(m.Count(1, 1), 615u);
  EXPECT_EQ(m.Count(5, 3), 0u);
  EXPECT_EQ(m.MaxExpert(), 9u);
  EXPECT_EQ(m.MaxMachine(), 11u);
  EXPECT_EQ(m.RegionC(), (std::map<size_t, uint64_t>{
                             {2, 38}, {3, 15}, {4, 4}, {8, 1}, {11, 1}}));
  EXPECT_EQ(m.RegionD().at(9), 2u);
  EXPECT_TRUE(m.RegionA().empty());
  EXPECT_TRUE(m.RegionB().empty());
}

TEST(MetricsTest, TransliteratedRunProportions) {
  ConfusionMatrix m = testing::TransliteratedRunMatrix();
  EXPECT_DOUBLE_EQ(TruePositiveProportion(m), 615 / kN);
  EXPECT_DOUBLE_EQ(FalsePositiveProportion(m), 25 / kN);
  EXPECT_DOUBLE_EQ(VerifiedTrueNegativeProportion(m), 176 / kN);
  EXPECT_DOUBLE_EQ(FalseNegativeProportion(m), 46 / kN);
  EXPECT_NEAR(Etpap(m), kRegionCCredit / kN, 1e-12);
  EXPECT_NEAR(Otpa(m), (615 + kRegionCCredit) / kN, 1e-12);
  EXPECT_NEAR(Emfi(m), (59 - kRegionCCredit) / kN, 1e-12);
  EXPECT_EQ(FormatPercent(Otpa(m)), "64.02%");
}

TEST(MetricsTest, TransliteratedRunEffectiveness) {
  ConfusionMatrix m = testing::TransliteratedRunMatrix();
  double diagonal = 615 + 176 + 16 + 11 + 3 + 2 + 1 + 3 + 2 + 3;
  double off = 46 * 1 + 38 * 1 + 15 * 2 + 4 * 3 + 1 * 7 + 1 * 10 +
               25 * 1 + 2 * 3 + 2 * 4 + 2 * 5 + 1 * 6 + 1 * 7 + 1 * 8 +
               2 * 9;
  EXPECT_NEAR(Effectiveness(m), diagonal / (diagonal + off), 1e-12);
}

TEST(MetricsTest, ClassicRates) {
  RateTriple r = ClassicMetrics(615, 176, 25, 46);
  EXPECT_NEAR(r.precision, 615.0 / 640, 1e-12);
  EXPECT_NEAR(r.recall, 615.0 / 661, 1e-12);
  EXPECT_NEAR(r.accuracy, 791.0 / 862, 1e-12);
  RateTriple one = ClassicMetrics(1, 0, 0, 0);
  EXPECT_EQ(one.accuracy, 1.0);
  EXPECT_EQ(one.precision, 1.0);
  EXPECT_EQ(one.recall, 1.0);
  EXPECT_THROW(ClassicMetrics(0, 0, 0, 0), Error);
}

TEST(MetricsTest, RatesFromProportions) {
  testing::ProportionRun run = testing::ArabicRunRates();
  RateTriple r = ClassicMetrics(run.tpp, run.vtnp, run.fpp, run.fnp);
  EXPECT_NEAR(r.precision, run.precision, 0.0005);
  EXPECT_NEAR(r.recall, run.recall, 0.0005);
}

TEST(MetricsTest, ProposedRates) {
  ConfusionMatrix m = testing::TransliteratedRunMatrix();
  RateTriple r = ProposedMetrics(m);
  double tpp = 0.615, vtnp = 0.176, fpp = 0.025, fnp = 0.046;
  double etpap = kRegionCCredit / kN, emfi = (59 - kRegionCCredit) / kN;
  EXPECT_NEAR(r.accuracy,
              (tpp + vtnp + etpap) / (tpp + vtnp + etpap + fpp + emfi + fnp),
              1e-12);
  EXPECT_NEAR(r.precision, (tpp + etpap) / (tpp + etpap + fpp + emfi + fnp),
              1e-12);
  EXPECT_EQ(r.recall, r.precision);

  ConfusionMatrix perfect;
  perfect.Add(1, 1, 5);
  perfect.Add(0, 0, 3);
  EXPECT_EQ(ProposedMetrics(perfect).accuracy, 1.0);
  ConfusionMatrix wrong;
  wrong.Add(0, 1, 4);
  EXPECT_EQ(ProposedMetrics(wrong).accuracy, 0.0);
}

TEST(MetricsTest, SmallFormulaCases) {
  ConfusionMatrix c;
  c.Add(1, 2, 10);
  c.set_declared_total(100);
  EXPECT_DOUBLE_EQ(Emfi(c), 0.05);
  EXPECT_DOUBLE_EQ(Etpap(c), 0.05);

  ConfusionMatrix d;
  d.Add(0, 3, 2);
  EXPECT_DOUBLE_EQ(Emfp(d), 3.0);
  EXPECT_DOUBLE_EQ(Emfn(d), 0.0);

  ConfusionMatrix a;
  a.Add(4, 1, 1);
  EXPECT_DOUBLE_EQ(Emttp(a), 0.75);

  ConfusionMatrix off;
  off.Add(1, 1, 1);
  off.Add(0, 2, 1);
  EXPECT_DOUBLE_EQ(Effectiveness(off), 1.0 / 3.0);

  ConfusionMatrix diagonal;
  diagonal.Add(2, 2, 4);
  EXPECT_EQ(Effectiveness(diagonal), 1.0);
  EXPECT_EQ(Etpap(diagonal), 0.0);
  EXPECT_EQ(Emfp(diagonal), 0.0);
}

TEST(MetricsTest, EmptyMatrixThrows) {
  ConfusionMatrix empty;
  try {
    TruePositiveProportion(empty);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyMatrix);
  }
  EXPECT_THROW(Effectiveness(empty), Error);
  EXPECT_THROW(ComputeReport(empty), Error);
}

TEST(BuildMatrixTest, CellsFromDecisions) {
  std::vector<MatchDecision> machine = {
      {"a1", "", Outcome::kPossible,
       {{"b1", "", 0.9}, {"b2", "", 0.7}, {"b3", "", 0.5}}},
      {"a2", "", Outcome::kNonMatch, {}},
      {"a3", "", Outcome::kMatch, {{"b9", "", 1.0}}},
      {"a4", "", Outcome::kMatch, {{"b4", "", 1.0}}},
  };
  ExpertLabels expert = {
      {"a1", {"b1"}}, {"a2", {}}, {"a3", {"b8"}}, {"a4", {"b4"}}};
  ConfusionMatrix m = BuildMatrix(machine, expert);
  EXPECT_EQ(m.Count(1, 3), 1u);
  EXPECT_EQ(m.Count(0, 0), 1u);
  EXPECT_EQ(m.Count(1, 1), 1u);
  // A single match naming the wrong record is a false positive.
  EXPECT_EQ(m.Count(0, 1), 1u);
  EXPECT_EQ(m.mismatched_single(), 1u);
}

TEST(BuildMatrixTest, KeyMismatch) {
  std::vector<MatchDecision> machine = {{"a1", "", Outcome::kNonMatch, {}}};
  try {
    BuildMatrix(machine, {{"a2", {}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kKeyMismatch);
  }
  EXPECT_THROW(BuildMatrix(machine, {{"a1", {}}, {"a2", {}}}), Error);
}

TEST(ReportTest, JsonRoundTrip) {
  ConfusionMatrix m = testing::TransliteratedRunMatrix();
  MetricsReport report = ComputeReport(m);
  EXPECT_EQ(report.n, 1000u);
  ASSERT_TRUE(report.classic_precision.has_value());
  EXPECT_NEAR(*report.classic_precision, 615.0 / 640, 1e-12);
  std::string text = ReportToJson(report, m);
  EXPECT_EQ(text, ReportToJson(ComputeReport(m), m));
  nlohmann::json j = nlohmann::json::parse(text);
  EXPECT_EQ(j["percent"]["tpp"], "61.50%");
  EXPECT_EQ(MatrixFromJson(text), m);
  EXPECT_EQ(MatrixFromJson(MatrixToJson(m)), m);
}

TEST(ReportTest, PlainCellList) {
  ConfusionMatrix m = MatrixFromJson(
      R"({"total": 10, "cells": [{"expert": 1, "machine": 1, "count": 7},
                                 {"expert": 0, "machine": 0, "count": 3}]})");
  EXPECT_EQ(m.Total(), 10u);
  EXPECT_EQ(m.Count(1, 1), 7u);
  EXPECT_THROW(MatrixFromJson("{\"cells\": 3}"), Error);
  EXPECT_THROW(MatrixFromJson("nonsense"), Error);
}

TEST(FormatPercentTest, TwoDecimals) {
  EXPECT_EQ(FormatPercent(0.615), "61.50%");
  EXPECT_EQ(FormatPercent(1.0), "100.00%");
  EXPECT_EQ(FormatPercent(0.0), "0.00%");
}

}  // namespace
}  // namespace namelink
