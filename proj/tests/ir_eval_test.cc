// Copyright 2026 The Polyrep Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polyrep/metrics.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "oracles.h"
#include "polyrep/error.h"
#include "polyrep/qrels_run.h"
#include "ranking_cases.h"

namespace polyrep {
namespace {

RunList RunOf(const std::string& text) {
  std::istringstream in(text);
  return ParseRun(in);
}

Qrels Judgments(const std::string& text) {
  std::istringstream in(text);
  return ParseQrels(in);
}

// qrels: d1=3, d2=1, d3=0; run order d3, d1, d2.
const char* kHandQrels = "q 0 d1 3\nq 0 d2 1\nq 0 d3 0\n";
const char* kHandRun = "q Q0 d3 1 3.0 t\nq Q0 d1 2 2.0 t\nq Q0 d2 3 1.0 t\n";

TEST(ParseRun, Basics) {
  EXPECT_TRUE(RunOf("").empty());
  const RunList one = RunOf("q1 Q0 d1 1 2.5 tag\n");
  ASSERT_EQ(one.Ranked("q1").size(), 1u);
  EXPECT_EQ(one.Ranked("q1")[0].docid, "d1");
  EXPECT_EQ(one.Ranked("q1")[0].score, 2.5);
  EXPECT_TRUE(one.Ranked("other").empty());
}

TEST(ParseRun, RanksComeFromScores) {
  // The rank column disagrees with the scores and is ignored; equal scores
  // fall back to ascending doc id.
  const RunList run = RunOf(
      "q Q0 b 1 1.0 t\n"
      "q Q0 c 2 5.0 t\n"
      "q Q0 a 3 1.0 t\n");
  const auto ranked = run.Ranked("q");
  ASSERT_EQ(ranked.size(), 3u);
  EXPECT_EQ(ranked[0].docid, "c");
  EXPECT_EQ(ranked[1].docid, "a");
  EXPECT_EQ(ranked[2].docid, "b");
}

TEST(ParseRun, Errors) {
  try {
    RunOf("q Q0 d1 1 1.0 t\nq Q0 d1 2 0.5 t\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(RunOf("q Q0 d1 1 1.0\n"), ParseError);
  EXPECT_THROW(RunOf("q Q0 d1 x 1.0 t\n"), ParseError);
  EXPECT_THROW(RunOf("q Q0 d1 1 abc t\n"), ParseError);
  EXPECT_THROW(RunOf("q Q0 d1 1 nan t\n"), ParseError);
  // Same doc under different queries is fine.
  EXPECT_NO_THROW(RunOf("q1 Q0 d1 1 1.0 t\nq2 Q0 d1 1 1.0 t\n"));
}

TEST(ParseRun, TruncatesToDepth) {
  std::string text;
  for (int i = 0; i < 1005; ++i) {
    text += "q Q0 d" + std::to_string(i) + " 1 " + std::to_string(i) + " t\n";
  }
  const RunList run = RunOf(text);
  ASSERT_EQ(run.Ranked("q").size(), kMaxRunDepth);
  EXPECT_EQ(run.Ranked("q")[0].docid, "d1004");
}

TEST(ParseQrels, BasicsAndErrors) {
  EXPECT_TRUE(Judgments("").empty());
  const Qrels q = Judgments(kHandQrels);
  EXPECT_EQ(q.Grade("q", "d1"), 3);
  EXPECT_EQ(q.Grade("q", "nope"), std::nullopt);
  EXPECT_THROW(Judgments("q 0 d1 4\n"), ParseError);
  EXPECT_THROW(Judgments("q 0 d1 -1\n"), ParseError);
  EXPECT_THROW(Judgments("q 0 d1 1\nq 0 d1 2\n"), ParseError);
  EXPECT_THROW(Judgments("q 0 d1\n"), ParseError);
  EXPECT_THROW(Judgments("q 0 d1 1.5\n"), ParseError);
}

TEST(Metrics, HandComputedFixture) {
  const RunList run = RunOf(kHandRun);
  const Qrels qrels = Judgments(kHandQrels);
  EXPECT_NEAR(AveragePrecision(run, qrels, "q"), 7.0 / 12.0, 1e-12);
  const double dcg = 3 / std::log2(3.0) + 1 / std::log2(4.0);
  const double idcg = 3 + 1 / std::log2(3.0);
  EXPECT_NEAR(NdcgAt(run, qrels, "q", 3), dcg / idcg, 1e-12);
  EXPECT_NEAR(NdcgAt(run, qrels, "q", 3), 0.6590, 1e-4);
  EXPECT_NEAR(PrecisionAt(run, qrels, "q", 10), 0.2, 1e-12);
  EXPECT_NEAR(ReciprocalRank(run, qrels, "q"), 0.5, 1e-12);

  const Qrels bq = Judgments("q 0 d1 1\nq 0 d2 1\nq 0 d3 0\nq 0 d4 0\n");
  EXPECT_NEAR(Bpref(run, bq, "q"), 0.5, 1e-12);
}

TEST(Metrics, PerfectAndEmptyRankings) {
  const Qrels qrels = Judgments(kHandQrels);
  const RunList ideal = RunOf("q Q0 d1 1 3 t\nq Q0 d2 2 2 t\nq Q0 d3 3 1 t\n");
  EXPECT_DOUBLE_EQ(AveragePrecision(ideal, qrels, "q"), 1.0);
  EXPECT_DOUBLE_EQ(NdcgAt(ideal, qrels, "q", 1000), 1.0);
  EXPECT_DOUBLE_EQ(Bpref(ideal, qrels, "q"), 1.0);
  EXPECT_DOUBLE_EQ(ReciprocalRank(ideal, qrels, "q"), 1.0);

  const RunList nothing = RunOf("q Q0 x 1 3 t\nq Q0 d3 2 2 t\n");
  EXPECT_EQ(AveragePrecision(nothing, qrels, "q"), 0.0);
  EXPECT_EQ(NdcgAt(nothing, qrels, "q", 10), 0.0);
  EXPECT_EQ(PrecisionAt(nothing, qrels, "q", 10), 0.0);
  EXPECT_EQ(ReciprocalRank(nothing, qrels, "q"), 0.0);
  EXPECT_EQ(Bpref(nothing, qrels, "q"), 0.0);

  const RunList unjudged = RunOf("q Q0 x 1 3 t\nq Q0 y 2 2 t\n");
  EXPECT_EQ(NdcgAt(unjudged, qrels, "q", 1000), 0.0);
}

TEST(Metrics, PrecisionCountsShortRankings) {
  std::string qrels_text, run_text;
  for (int i = 0; i < 12; ++i) {
    qrels_text += "q 0 r" + std::to_string(i) + " 1\n";
  }
  for (int i = 0; i < 10; ++i) {
    const std::string doc = i < 3 ? "r" + std::to_string(i) : "n" + std::to_string(i);
    run_text += "q Q0 " + doc + " 1 " + std::to_string(100 - i) + " t\n";
  }
  EXPECT_DOUBLE_EQ(PrecisionAt(RunOf(run_text), Judgments(qrels_text), "q", 10), 0.3);
  EXPECT_DOUBLE_EQ(PrecisionAt(RunOf("q Q0 r0 1 1 t\n"), Judgments(qrels_text), "q", 10), 0.1);
}

TEST(Metrics, BprefWithoutJudgedNonrelevant) {
  const Qrels q = Judgments("q 0 a 1\nq 0 b 2\n");
  // min(R, N) = 0: every retrieved relevant contributes 1.
  EXPECT_DOUBLE_EQ(Bpref(RunOf("q Q0 x 1 3 t\nq Q0 a 2 2 t\n"), q, "q"), 0.5);
}

TEST(Evaluate, QueriesWithoutRelevantScoreZeroAndCount) {
  const Qrels qrels = Judgments("q 0 d1 3\nz 0 d9 0\n");
  const RunList run = RunOf("q Q0 d1 1 1 t\nz Q0 d9 1 1 t\n");
  const MetricReport report = Evaluate(run, qrels);
  ASSERT_EQ(report.per_query.size(), 2u);
  for (Metric m : kAllMetrics) {
    EXPECT_EQ(report.Get("z", m), 0.0) << ToString(m);
  }
  EXPECT_DOUBLE_EQ(report.mean[static_cast<std::size_t>(Metric::kMap)], 0.5);
  EXPECT_DOUBLE_EQ(report.mean[static_cast<std::size_t>(Metric::kMrr)], 0.5);
}

TEST(Evaluate, EmptyRunAndNoOverlap) {
  const Qrels qrels = Judgments(kHandQrels);
  const MetricReport empty = Evaluate(RunList{}, qrels);
  for (double v : empty.mean) EXPECT_EQ(v, 0.0);
  EXPECT_THROW(Evaluate(RunOf("other Q0 d1 1 1 t\n"), qrels), InvalidArgument);
}

TEST(Evaluate, PerfectRunScoresOne) {
  std::string qrels_text, run_text;
  for (const char* q : {"a", "b"}) {
    for (int i = 0; i < 12; ++i) {
      const std::string doc = "d" + std::to_string(i);
      qrels_text += std::string(q) + " 0 " + doc + " " + std::to_string(i < 4 ? 3 : 1) + "\n";
      run_text += std::string(q) + " Q0 " + doc + " 1 " + std::to_string(50 - i) + " t\n";
    }
    qrels_text += std::string(q) + " 0 junk 0\n";
  }
  const MetricReport report = Evaluate(RunOf(run_text), Judgments(qrels_text));
  for (Metric m : kAllMetrics) {
    EXPECT_DOUBLE_EQ(report.mean[static_cast<std::size_t>(m)], 1.0) << ToString(m);
  }
}

TEST(MetricReport, TsvRoundTrip) {
  const MetricReport report =
      Evaluate(ParseRunFile(POLYREP_TEST_DATA_DIR "/fixture_run.txt"),
               ParseQrelsFile(POLYREP_TEST_DATA_DIR "/fixture_qrels.txt"));
  const std::string tsv = MetricReportTsv(report);
  EXPECT_TRUE(tsv.starts_with("qid\tmetric\tvalue\n"));
  EXPECT_NE(tsv.find("all\tmap\t"), std::string::npos);
  std::istringstream in(tsv);
  const MetricReport back = ReadMetricReport(in);
  ASSERT_EQ(back.per_query.size(), report.per_query.size());
  for (const auto& [qid, values] : report.per_query) {
    for (Metric m : kAllMetrics) {
      EXPECT_NEAR(back.Get(qid, m), values[static_cast<std::size_t>(m)], 1e-6);
    }
  }
  EXPECT_EQ(MetricReportTsv(back), tsv);

  std::istringstream bad("qid\tmetric\tvalue\nq\tmap\t0.5\n");
  EXPECT_THROW(ReadMetricReport(bad), ParseError);
}

TEST(Metrics, FixtureFirstRelevantAtRankTwo) {
  const RunList run = ParseRunFile(POLYREP_TEST_DATA_DIR "/fixture_run.txt");
  const Qrels qrels = ParseQrelsFile(POLYREP_TEST_DATA_DIR "/fixture_qrels.txt");
  EXPECT_DOUBLE_EQ(ReciprocalRank(run, qrels, "t1"), 0.5);
  EXPECT_DOUBLE_EQ(ReciprocalRank(run, qrels, "t2"), 1.0);
  EXPECT_DOUBLE_EQ(ReciprocalRank(run, qrels, "t3"), 1.0 / 3);
}

void ExpectMatchesOracle(const testing_util::RankingCase& c) {
  const RunList run = testing_util::ToRun(c);
  const Qrels qrels = testing_util::ToQrels(c);
  const oracle::Instance in = testing_util::ToInstance(c);
  const char* q = testing_util::kQuery;
  ASSERT_NEAR(AveragePrecision(run, qrels, q), oracle::AveragePrecision(in), 1e-9);
  ASSERT_NEAR(NdcgAt(run, qrels, q, 1000), oracle::NdcgAt(in, 1000), 1e-9);
  ASSERT_NEAR(NdcgAt(run, qrels, q, 10), oracle::NdcgAt(in, 10), 1e-9);
  ASSERT_NEAR(NdcgAt(run, qrels, q, 2), oracle::NdcgAt(in, 2), 1e-9);
  ASSERT_NEAR(PrecisionAt(run, qrels, q, 10), oracle::PrecisionAt(in, 10), 1e-9);
  ASSERT_NEAR(ReciprocalRank(run, qrels, q), oracle::ReciprocalRank(in), 1e-9);
  ASSERT_NEAR(Bpref(run, qrels, q), oracle::Bpref(in), 1e-9);
}

TEST(MetricsOracle, ExhaustiveUpToThreeDocuments) {
  for (int n = 0; n <= 3; ++n) {
    testing_util::ForEachCase(n, [](const auto& c) { ExpectMatchesOracle(c); });
  }
}

TEST(MetricsProperties, MovingRelevantUpNeverHurts) {
  std::mt19937 rng(3);
  for (int iter = 0; iter < 3000; ++iter) {
    testing_util::RankingCase c;
    const int n = 1 + static_cast<int>(rng() % 12);
    for (int i = 0; i < n; ++i) c.grades.push_back(static_cast<int>(rng() % 4));
    for (int i = 0; i <= n; ++i) {
      if (rng() % 4 != 0) c.order.push_back(i);
    }
    std::shuffle(c.order.begin(), c.order.end(), rng);
    // Pick a relevant document with a non-relevant one directly above it.
    std::vector<std::size_t> movable;
    for (std::size_t i = 1; i < c.order.size(); ++i) {
      auto grade = [&](int idx) { return idx == n ? 0 : c.grades[idx]; };
      if (grade(c.order[i]) > 0 && grade(c.order[i - 1]) == 0) movable.push_back(i);
    }
    if (movable.empty()) continue;
    const std::size_t at = movable[rng() % movable.size()];
    testing_util::RankingCase up = c;
    std::swap(up.order[at], up.order[at - 1]);

    const RunList before = testing_util::ToRun(c), after = testing_util::ToRun(up);
    const Qrels qrels = testing_util::ToQrels(c);
    for (Metric m : kAllMetrics) {
      EXPECT_GE(Score(m, after, qrels, "q") + 1e-12, Score(m, before, qrels, "q"))
          << ToString(m);
      EXPECT_GE(Score(m, after, qrels, "q"), 0.0);
      EXPECT_LE(Score(m, after, qrels, "q"), 1.0 + 1e-12);
    }
  }
}

}  // namespace
}  // namespace polyrep
