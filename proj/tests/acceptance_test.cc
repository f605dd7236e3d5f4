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

// One PASS/FAIL/SKIP line per acceptance criterion. Exit status is nonzero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <thread>
#include <string>
#include <vector>

#include "oracles.h"
#include "ordering_check.h"
#include "polyrep/correlation.h"
#include "polyrep/error.h"
#include "polyrep/evidence.h"
#include "polyrep/metrics.h"
#include "polyrep/opinion.h"
#include "polyrep/porter_stemmer.h"
#include "polyrep/qrels_run.h"
#include "polyrep/polyrep.h"
#include "polyrep/report.h"
#include "polyrep/text_prep.h"
#include "polyrep/topic.h"
#include "ranking_cases.h"

namespace {

using namespace polyrep;
using Clock = std::chrono::steady_clock;

constexpr double kAlgebraTol = 1e-9;
constexpr double kWitnessGap = 1e-3;
constexpr double kAlgebraBudgetSeconds = 5.0;
constexpr int kAlgebraPairs = 10000;
constexpr std::uint64_t kMaxEvidence = 1000;
constexpr int kSumUlps = 4;
constexpr double kPipelineTol = 1e-9;
constexpr double kMetricOracleTol = 1e-9;
constexpr double kMetricHandTol = 1e-6;
constexpr double kMetricBudgetSeconds = 30.0;
constexpr int kMaxJudged = 5;
constexpr std::size_t kMinPorterVectors = 100;
constexpr double kSpearmanTol = 1e-9;
constexpr int kSpearmanVectors = 1000;

enum class Verdict { kPass, kFail, kSkip };

struct Outcome {
  Verdict verdict;
  std::string detail;
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Opinion RandomOpinion(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double x = unit(rng), y = unit(rng);
  if (x > y) std::swap(x, y);
  return Opinion::Make(x, y - x, 1.0 - y, unit(rng));
}

bool Additive(const Opinion& o) {
  return std::abs(o.belief() + o.disbelief() + o.uncertainty() - 1.0) <= kAlgebraTol;
}

Outcome OpinionAlgebra() {
  const auto start = Clock::now();
  std::mt19937_64 rng(20100101);
  int failures = 0;
  for (int i = 0; i < kAlgebraPairs; ++i) {
    const Opinion x = RandomOpinion(rng), y = RandomOpinion(rng), z = RandomOpinion(rng);
    const Opinion c = Consensus(x, y);
    const Opinion r = Recommendation(x, y);
    const Opinion cyx = Consensus(y, x);
    bool ok = Additive(c) && Additive(r);
    ok = ok && std::abs(c.belief() - cyx.belief()) <= kAlgebraTol &&
         std::abs(c.disbelief() - cyx.disbelief()) <= kAlgebraTol &&
         std::abs(c.uncertainty() - cyx.uncertainty()) <= kAlgebraTol;
    ok = ok && Consensus(Consensus(x, y), z).ApproxEquals(Consensus(x, Consensus(y, z)),
                                                          kAlgebraTol);
    ok = ok && Recommendation(Recommendation(x, y), z)
                   .ApproxEquals(Recommendation(x, Recommendation(y, z)), kAlgebraTol);
    failures += !ok;
  }
  const Opinion wx = Opinion::Make(0.8, 0.1, 0.1, 0.5);
  const Opinion wy = Opinion::Make(0.5, 0.3, 0.2, 0.5);
  const double gap = std::abs(Expectation(Recommendation(wx, wy)) -
                              Expectation(Recommendation(wy, wx)));
  const double elapsed = Seconds(start);
  const bool pass = failures == 0 && gap > kWitnessGap && elapsed < kAlgebraBudgetSeconds;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d/%d pairs violate; witness gap %.4f; %.2fs", failures,
                kAlgebraPairs, gap, elapsed);
  return {pass ? Verdict::kPass : Verdict::kFail, buf};
}

Outcome EvidenceMapping() {
  int failures = 0;
  for (std::uint64_t r = 0; r <= kMaxEvidence; ++r) {
    for (std::uint64_t s = 0; r + s <= kMaxEvidence; ++s) {
      const Opinion o = FromEvidence({r, s}, 0.5);
      const double t = static_cast<double>(r + s + 2);
      const double sum = o.belief() + o.disbelief() + o.uncertainty();
      const bool ok = o.belief() == static_cast<double>(r) / t &&
                      o.disbelief() == static_cast<double>(s) / t &&
                      o.uncertainty() == 2.0 / t &&
                      std::abs(sum - 1.0) <= kSumUlps * std::numeric_limits<double>::epsilon();
      failures += !ok;
    }
  }
  auto is = [](const Opinion& o, double b, double d, double u) {
    return o.belief() == b && o.disbelief() == d && o.uncertainty() == u &&
           o.base_rate() == 0.5;
  };
  const bool examples = is(FromEvidence({0, 0}, 0.5), 0, 0, 1) &&
                        is(FromEvidence({2, 2}, 0.5), 1.0 / 3, 1.0 / 3, 1.0 / 3) &&
                        is(FromEvidence({3, 0}, 0.5), 0.6, 0, 0.4);
  return {failures == 0 && examples ? Verdict::kPass : Verdict::kFail,
          std::to_string(failures) + " (r,s) pairs off; worked examples " +
              (examples ? "hold" : "differ")};
}

Outcome PipelineExample() {
  const TermSet q = Tokenize("a b c", PrepLevel::kRaw);
  const TermSet a = Tokenize("a b d", PrepLevel::kRaw);
  const TermSet b = Tokenize("b d e", PrepLevel::kRaw);
  CombinationSpec spec;
  spec.op = Operator::kConsensus;
  const Opinion o = Fuse(ConsensusEvidence(a, b, q, PositiveRule::kUnion), spec);
  const bool ok = std::abs(o.belief() - 0.625) <= kPipelineTol &&
                  std::abs(o.disbelief() - 0.125) <= kPipelineTol &&
                  std::abs(o.uncertainty() - 0.25) <= kPipelineTol &&
                  std::abs(Expectation(o) - 0.75) <= kPipelineTol;
  std::ostringstream os;
  os << o << " E=" << Expectation(o);
  return {ok ? Verdict::kPass : Verdict::kFail, os.str()};
}

Outcome MetricOracles() {
  const auto start = Clock::now();
  long cases = 0, failures = 0;
  const char* q = testing_util::kQuery;
  for (int n = 0; n <= kMaxJudged; ++n) {
    // The ideal DCG depends only on the grades, so memoise it per assignment.
    std::map<std::vector<int>, std::pair<double, double>> ideal;
    testing_util::ForEachCase(n, [&](const testing_util::RankingCase& c) {
      const oracle::Instance in = testing_util::ToInstance(c);
      auto it = ideal.find(c.grades);
      if (it == ideal.end()) {
        std::vector<int> perm = c.grades;
        std::sort(perm.begin(), perm.end());
        double full = 0, top10 = 0;
        do {
          full = std::max(full, oracle::DcgOf(perm, 1000));
          top10 = std::max(top10, oracle::DcgOf(perm, 10));
        } while (std::next_permutation(perm.begin(), perm.end()));
        it = ideal.emplace(c.grades, std::pair{full, top10}).first;
      }
      const auto ndcg = [&](double idcg, std::size_t k) {
        return idcg == 0 ? 0.0 : oracle::DcgOf(in.ranking, k) / idcg;
      };
      const RunList run = testing_util::ToRun(c);
      const Qrels qrels = testing_util::ToQrels(c);
      const double want[] = {oracle::AveragePrecision(in), ndcg(it->second.first, 1000),
                             oracle::Bpref(in),            oracle::PrecisionAt(in, 10),
                             ndcg(it->second.second, 10),  oracle::ReciprocalRank(in)};
      for (std::size_t m = 0; m < kAllMetrics.size(); ++m) {
        if (!(std::abs(Score(kAllMetrics[m], run, qrels, q) - want[m]) <= kMetricOracleTol)) {
          ++failures;
        }
      }
      ++cases;
    });
  }

  auto run_of = [](const std::string& text) {
    std::istringstream in(text);
    return ParseRun(in);
  };
  auto qrels_of = [](const std::string& text) {
    std::istringstream in(text);
    return ParseQrels(in);
  };
  const RunList run = run_of("q Q0 d3 1 3 t\nq Q0 d1 2 2 t\nq Q0 d2 3 1 t\n");
  const Qrels graded = qrels_of("q 0 d1 3\nq 0 d2 1\nq 0 d3 0\n");
  const Qrels binary = qrels_of("q 0 d1 1\nq 0 d2 1\nq 0 d3 0\nq 0 d4 0\n");
  const bool hand = std::abs(AveragePrecision(run, graded, "q") - 7.0 / 12.0) <= kMetricHandTol &&
                    std::abs(NdcgAt(run, graded, "q", 3) - 0.6590) <= 1e-4 &&
                    std::abs(Bpref(run, binary, "q") - 0.5) <= kMetricHandTol;
  const double elapsed = Seconds(start);
  const bool pass = failures == 0 && hand && elapsed < kMetricBudgetSeconds;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%ld rankings, %ld metric mismatches; hand fixtures %s; %.2fs",
                cases, failures, hand ? "hold" : "differ", elapsed);
  return {pass ? Verdict::kPass : Verdict::kFail, buf};
}

Outcome PorterVectors() {
  std::ifstream in(POLYREP_TEST_DATA_DIR "/porter_vectors.tsv");
  std::string line;
  std::size_t total = 0, mismatches = 0;
  std::string first_bad;
  while (std::getline(in, line)) {
    const auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    ++total;
    const std::string word = line.substr(0, tab), stem = line.substr(tab + 1);
    if (PorterStem(word) != stem) {
      if (mismatches++ == 0) first_bad = word;
    }
  }
  const bool pass = total >= kMinPorterVectors && mismatches == 0;
  std::string detail = std::to_string(total) + " vectors, " + std::to_string(mismatches) +
                       " mismatches";
  if (!first_bad.empty()) detail += " (first: " + first_bad + ")";
  return {pass ? Verdict::kPass : Verdict::kFail, detail};
}

Outcome IsearchOrdering(const std::string& topics_path) {
  if (topics_path.empty()) {
    return {Verdict::kSkip, "no iSearch topic file given (--isearch-topics)"};
  }
  std::vector<Topic> topics;
  try {
    topics = ReadTopicsFile(topics_path);
  } catch (const Error& e) {
    return {Verdict::kFail, e.what()};
  }
  std::string detail;
  for (PositiveRule rule : {PositiveRule::kUnion, PositiveRule::kIntersection}) {
    for (AggregationMode mode : {AggregationMode::kMacro, AggregationMode::kPooled}) {
      std::string why;
      const std::string setting =
          std::string(ToString(rule)) + "/" + std::string(ToString(mode));
      if (testing_util::WorkTaskNeedLeads(topics, rule, mode, &why)) {
        return {Verdict::kPass, "holds under " + setting};
      }
      detail += setting + " [" + why + "] ";
    }
  }
  return {Verdict::kFail, detail};
}

std::string FullPipeline(const std::vector<Topic>& topics, unsigned threads) {
  MatrixOptions options;
  options.threads = threads;
  const auto results = RunMatrix(topics, options);
  const MetricReport metrics =
      Evaluate(ParseRunFile(POLYREP_TEST_DATA_DIR "/fixture_run.txt"),
               ParseQrelsFile(POLYREP_TEST_DATA_DIR "/fixture_qrels.txt"));
  std::string out = PrepDumpTsv(topics, kAllPrepLevels) + PolyrepTableTsv(results) +
                    PolyrepTableJson(results) + PerTopicTsv(results) +
                    MetricReportTsv(metrics);
  for (const auto& r : results) {
    out += PlotDataText(PlotPoints(r, metrics, Component::kBelief, Metric::kMap));
  }
  return out;
}

Outcome Determinism() {
  const auto topics = ReadTopicsFile(POLYREP_TEST_DATA_DIR "/fixture_topics.jsonl");
  const std::string serial = FullPipeline(topics, 1);
  const std::string again = FullPipeline(topics, 1);
  const unsigned wide = std::max(64u, std::thread::hardware_concurrency());
  const std::string parallel = FullPipeline(topics, wide);
  const bool pass = serial == again && serial == parallel;
  return {pass ? Verdict::kPass : Verdict::kFail,
          std::to_string(serial.size()) + " bytes; 1 vs " + std::to_string(wide) + " threads " +
              (serial == parallel ? "identical" : "differ")};
}

Outcome SpearmanChecks() {
  const std::vector<double> x = {1, 2, 3, 4, 5, 6};
  const std::vector<double> up = {0.1, 0.4, 0.5, 2, 9, 10};
  const std::vector<double> down = {7, 5, 3, 1, -1, -3};
  const bool exact = Spearman(x, up) == 1.0 && Spearman(x, down) == -1.0;

  std::mt19937 rng(1987);
  int checked = 0, failures = 0, degenerate = 0;
  while (checked < kSpearmanVectors) {
    const std::size_t n = 2 + rng() % 19;
    std::vector<double> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = static_cast<double>(rng() % 6);
      b[i] = static_cast<double>(rng() % 9) / 4.0;
    }
    const double want = oracle::Spearman(a, b);
    if (!std::isfinite(want)) {
      ++degenerate;
      bool threw = false;
      try {
        Spearman(a, b);
      } catch (const InvalidArgument&) {
        threw = true;
      }
      failures += !threw;
      continue;
    }
    failures += !(std::abs(Spearman(a, b) - want) <= kSpearmanTol);
    ++checked;
  }
  return {exact && failures == 0 ? Verdict::kPass : Verdict::kFail,
          std::string("monotone ") + (exact ? "exact" : "inexact") + "; " +
              std::to_string(checked) + " tied vectors, " + std::to_string(failures) +
              " mismatches (" + std::to_string(degenerate) + " constant inputs rejected)"};
}

}  // namespace

int main(int argc, char** argv) {
  std::string isearch;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--isearch-topics" && i + 1 < argc) {
      isearch = argv[++i];
    } else {
      std::fprintf(stderr, "usage: %s [--isearch-topics FILE]\n", argv[0]);
      return 2;
    }
  }

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"opinion-algebra", OpinionAlgebra},
      {"evidence-mapping", EvidenceMapping},
      {"pipeline-example", PipelineExample},
      {"metric-oracles", MetricOracles},
      {"porter-vectors", PorterVectors},
      {"isearch-ordering", [&] { return IsearchOrdering(isearch); }},
      {"determinism", Determinism},
      {"spearman", SpearmanChecks},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {Verdict::kFail, std::string("exception: ") + e.what()};
    }
    const char* tag = o.verdict == Verdict::kPass   ? "PASS"
                      : o.verdict == Verdict::kSkip ? "SKIP"
                                                    : "FAIL";
    failed += o.verdict == Verdict::kFail;
    std::printf("%s %d %s: %s\n", tag, index, name, o.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
