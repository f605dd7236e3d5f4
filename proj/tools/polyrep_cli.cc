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

// polyrep: preprocess topics, build polyrepresentation tables, evaluate runs
// and correlate opinion components with per-query effectiveness.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "nlohmann/json.hpp"
#include "polyrep/correlation.h"
#include "polyrep/error.h"
#include "polyrep/evidence.h"
#include "polyrep/metrics.h"
#include "polyrep/polyrep.h"
#include "polyrep/qrels_run.h"
#include "polyrep/report.h"
#include "polyrep/text_prep.h"
#include "polyrep/topic.h"

namespace fs = std::filesystem;

namespace polyrep {
namespace {

struct Config {
  std::string topics;
  std::string prep = "I,II,III,IV";
  double alpha = kDefaultAlpha;
  std::string positive_rule = "union";
  std::string agg = "macro";
  std::string op = "both";
  std::string out;
  std::string format = "tsv";
  unsigned threads = 0;
  std::vector<std::string> runs;
  std::string qrels;
  std::vector<std::string> metric_files;
  std::string measures = "map,ndcg,bpref,p10,ndcg10,mrr";
  bool allow_undefined = false;
};

bool Json(const Config& c) { return c.format == "obj"; }

// Writes to stdout when no output directory was given.
void Emit(const Config& c, const std::string& stem, const std::string& text,
          bool primary = true) {
  if (c.out.empty()) {
    if (primary) std::cout << text;
    return;
  }
  const fs::path path = fs::path(c.out) / (stem + (Json(c) ? ".json" : ".tsv"));
  fs::create_directories(path.parent_path());
  std::ofstream os(path, std::ios::binary);
  os << text;
  if (!os) throw Error("cannot write " + path.string());
}

void WriteFile(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  std::ofstream os(path, std::ios::binary);
  os << text;
  if (!os) throw Error("cannot write " + path.string());
}

MatrixOptions MatrixFrom(const Config& c) {
  MatrixOptions o;
  o.levels = ParsePrepLevels(c.prep);
  o.alpha = c.alpha;
  o.positive_rule = ParsePositiveRule(c.positive_rule);
  o.mode = ParseAggregationMode(c.agg);
  if (c.op == "consensus") {
    o.recommendation = false;
  } else if (c.op == "recommendation") {
    o.consensus = false;
  } else if (c.op != "both") {
    throw InvalidArgument("unknown operator '" + c.op + "'");
  }
  o.threads = c.threads;
  return o;
}

void AddPolyrepOptions(CLI::App* sub, Config& c) {
  sub->add_option("--topics", c.topics, "Topics file (JSONL)")->required();
  sub->add_option("--prep", c.prep, "Preprocessing levels, e.g. I,III")
      ->capture_default_str();
  sub->add_option("--alpha", c.alpha, "Base rate")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  sub->add_option("--positive-rule", c.positive_rule)
      ->check(CLI::IsMember({"union", "intersection"}))
      ->capture_default_str();
  sub->add_option("--agg", c.agg)
      ->check(CLI::IsMember({"macro", "pooled"}))
      ->capture_default_str();
  sub->add_option("--operator", c.op)
      ->check(CLI::IsMember({"consensus", "recommendation", "both"}))
      ->capture_default_str();
  sub->add_option("--threads", c.threads, "Worker threads, 0 = hardware")
      ->capture_default_str();
}

void AddOutputOptions(CLI::App* sub, Config& c) {
  sub->add_option("--out", c.out, "Output directory (default: stdout)");
  sub->add_option("--format", c.format)
      ->check(CLI::IsMember({"tsv", "obj"}))
      ->capture_default_str();
}

int RunPrep(const Config& c) {
  const std::vector<Topic> topics = ReadTopicsFile(c.topics);
  const std::vector<PrepLevel> levels = ParsePrepLevels(c.prep);
  Emit(c, "prep", Json(c) ? PrepDumpJson(topics, levels)
                          : PrepDumpTsv(topics, levels));
  return 0;
}

int RunPolyrep(const Config& c) {
  const std::vector<Topic> topics = ReadTopicsFile(c.topics);
  const auto results = RunMatrix(topics, MatrixFrom(c));
  Emit(c, "polyrep", Json(c) ? PolyrepTableJson(results)
                             : PolyrepTableTsv(results));
  if (!c.out.empty()) {
    WriteFile(fs::path(c.out) / "polyrep_per_topic.tsv", PerTopicTsv(results));
  }
  return 0;
}

int RunEvaluate(const Config& c) {
  if (c.runs.size() != 1) throw InvalidArgument("evaluate takes exactly one --run");
  const MetricReport report =
      Evaluate(ParseRunFile(c.runs.front()), ParseQrelsFile(c.qrels));
  Emit(c, "metrics", Json(c) ? MetricReportJson(report) : MetricReportTsv(report));
  return 0;
}

// "rep_a+rep_b=PATH" binds PATH to one representation pair in either order;
// a bare PATH applies to every pair.
struct MetricSources {
  std::optional<MetricReport> fallback;
  std::map<std::pair<Representation, Representation>, MetricReport> by_pair;

  static std::pair<Representation, Representation> Key(Representation a,
                                                       Representation b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
  }

  void Add(const std::string& arg, const std::function<MetricReport(const std::string&)>& load) {
    const auto eq = arg.find('=');
    if (eq != std::string::npos) {
      const std::string key = arg.substr(0, eq);
      const auto plus = key.find('+');
      if (plus != std::string::npos) {
        const auto k = Key(ParseRepresentation(key.substr(0, plus)),
                           ParseRepresentation(key.substr(plus + 1)));
        if (by_pair.contains(k)) throw InvalidArgument("pair '" + key + "' given twice");
        by_pair.emplace(k, load(arg.substr(eq + 1)));
        return;
      }
    }
    if (fallback) throw InvalidArgument("more than one metric source without a pair key");
    fallback = load(arg);
  }

  const MetricReport* Find(const CombinationSpec& spec) const {
    const auto it = by_pair.find(Key(spec.rep_a, spec.rep_b));
    if (it != by_pair.end()) return &it->second;
    return fallback ? &*fallback : nullptr;
  }
};

std::vector<Metric> ParseMeasures(const std::string& text) {
  std::vector<Metric> out;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const Metric m = ParseMetric(rest.substr(0, comma));
    if (std::find(out.begin(), out.end(), m) != out.end()) {
      throw InvalidArgument("measure listed twice: " + std::string(ToString(m)));
    }
    out.push_back(m);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (out.empty()) throw InvalidArgument("no measures selected");
  return out;
}

std::string PlotName(const CombinationSpec& s, Component comp, Metric m) {
  std::string name = std::string(ToRoman(s.level)) + "_" + std::string(ToString(s.op)) +
                     "_" + std::string(ToString(s.rep_a)) + "_" +
                     std::string(ToString(s.rep_b));
  if (s.op == Operator::kRecommendation) name += "_" + std::string(ToString(s.order));
  return name + "_" + std::string(ToString(comp)) + "_" + std::string(ToString(m)) + ".tsv";
}

int RunCorrelate(const Config& c) {
  if (c.runs.empty() == c.metric_files.empty()) {
    throw InvalidArgument("give either --run (with --qrels) or --metrics");
  }
  if (!c.runs.empty() && c.qrels.empty()) throw InvalidArgument("--run needs --qrels");

  MetricSources sources;
  if (!c.runs.empty()) {
    const Qrels qrels = ParseQrelsFile(c.qrels);
    for (const auto& arg : c.runs) {
      sources.Add(arg, [&](const std::string& path) {
        return Evaluate(ParseRunFile(path), qrels);
      });
    }
  } else {
    for (const auto& arg : c.metric_files) {
      sources.Add(arg, [](const std::string& path) { return ReadMetricReportFile(path); });
    }
  }
  const std::vector<Metric> measures = ParseMeasures(c.measures);

  const std::vector<Topic> topics = ReadTopicsFile(c.topics);
  const auto results = RunMatrix(topics, MatrixFrom(c));

  std::string tsv = "level\toperator\trep_a\trep_b\torder\tcomponent\tmetric\trho\n";
  nlohmann::json rows = nlohmann::json::array();
  std::map<std::string, std::string> plots;
  for (const CombinationResult& r : results) {
    const MetricReport* metrics = sources.Find(r.spec);
    if (metrics == nullptr) continue;
    const std::string order = r.spec.op == Operator::kConsensus
                                  ? "-"
                                  : std::string(ToString(r.spec.order));
    for (Component comp : {Component::kBelief, Component::kUncertainty}) {
      for (Metric m : measures) {
        const auto points = PlotPoints(r, *metrics, comp, m);
        std::optional<double> rho;
        try {
          rho = CorrelateComponents(r, *metrics, comp, m);
        } catch (const InvalidArgument& e) {
          if (!c.allow_undefined) {
            throw InvalidArgument(r.spec.Label() + " " + std::string(ToString(comp)) +
                                  " vs " + std::string(ToString(m)) + ": " + e.what());
          }
        }
        tsv += std::string(ToRoman(r.spec.level)) + "\t" +
               std::string(ToString(r.spec.op)) + "\t" +
               std::string(ToString(r.spec.rep_a)) + "\t" +
               std::string(ToString(r.spec.rep_b)) + "\t" + order + "\t" +
               std::string(ToString(comp)) + "\t" + std::string(ToString(m)) + "\t" +
               (rho ? FormatFixed(*rho, 6) : "NA") + "\n";
        rows.push_back({{"level", ToRoman(r.spec.level)},
                        {"operator", ToString(r.spec.op)},
                        {"rep_a", ToString(r.spec.rep_a)},
                        {"rep_b", ToString(r.spec.rep_b)},
                        {"order", order},
                        {"component", ToString(comp)},
                        {"metric", ToString(m)},
                        {"rho", rho ? nlohmann::json(*rho) : nlohmann::json()}});
        plots.emplace(PlotName(r.spec, comp, m), PlotDataText(points));
      }
    }
  }
  if (rows.empty()) throw InvalidArgument("no combination has a metric source");

  Emit(c, "correlations",
       Json(c) ? rows.dump(2, ' ', false, nlohmann::json::error_handler_t::replace) + "\n"
               : tsv);
  if (!c.out.empty()) {
    for (const auto& [name, text] : plots) {
      WriteFile(fs::path(c.out) / "plots" / name, text);
    }
  }
  return 0;
}

// Flat key=value config entries become `--key value` arguments placed before
// the command-line ones, so explicit flags win.
std::vector<std::string> ConfigArgs(const std::string& path, const CLI::App& chosen,
                                    const CLI::App& root) {
  std::vector<std::string> args;
  for (const CLI::ConfigItem& item : CLI::ConfigINI().from_file(path)) {
    const std::string flag = "--" + item.fullname();
    if (chosen.get_option_no_throw(flag) == nullptr) {
      bool known = false;
      for (const CLI::App* sub : root.get_subcommands({})) {
        known = known || sub->get_option_no_throw(flag) != nullptr;
      }
      if (!known) throw InvalidArgument(path + ": unknown key '" + item.fullname() + "'");
      continue;
    }
    std::string value;
    for (const auto& in : item.inputs) value += (value.empty() ? "" : ",") + in;
    args.push_back(flag);
    args.push_back(value);
  }
  return args;
}

int Main(int argc, char** argv) {
  CLI::App app{"Polyrepresentation of query context with subjective logic"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "polyrep 0.1.0");
  Config c;
  std::string config_path;

  CLI::App* prep = app.add_subcommand("prep", "Dump per-level term sets of every topic");
  prep->add_option("--topics", c.topics, "Topics file (JSONL)")->required();
  prep->add_option("--prep", c.prep, "Preprocessing levels")->capture_default_str();
  AddOutputOptions(prep, c);

  CLI::App* poly = app.add_subcommand("polyrep", "Polyrepresentation probability table");
  AddPolyrepOptions(poly, c);
  AddOutputOptions(poly, c);

  CLI::App* eval = app.add_subcommand("evaluate", "Per-query and mean effectiveness");
  eval->add_option("--run", c.runs, "Run file")->required();
  eval->add_option("--qrels", c.qrels, "Qrels file")->required();
  AddOutputOptions(eval, c);

  CLI::App* corr = app.add_subcommand("correlate",
                                      "Spearman rho of belief/uncertainty vs metrics");
  AddPolyrepOptions(corr, c);
  AddOutputOptions(corr, c);
  corr->add_option("--run", c.runs, "[rep_a+rep_b=]run file");
  corr->add_option("--qrels", c.qrels, "Qrels file");
  corr->add_option("--metrics", c.metric_files, "[rep_a+rep_b=]metric report TSV");
  corr->add_option("--measures", c.measures, "Comma-separated metric names")
      ->capture_default_str();
  corr->add_flag("--allow-undefined", c.allow_undefined,
                 "Write NA for constant inputs instead of failing");

  for (CLI::App* sub : {prep, poly, eval, corr}) {
    sub->add_option("--config", config_path, "Flat key=value file of flag values");
  }

  std::vector<std::string> args(argv + 1, argv + argc);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (!config_path.empty()) {
    CLI::App* chosen = app.get_subcommands().front();
    std::vector<std::string> merged = {chosen->get_name()};
    for (auto& a : ConfigArgs(config_path, *chosen, app)) merged.push_back(std::move(a));
    merged.insert(merged.end(), argv + 2, argv + argc);
    for (CLI::App* sub : {prep, poly, eval, corr}) {
      for (CLI::Option* opt : sub->get_options()) {
        opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
      }
    }
    // Repeatable source options keep every value.
    corr->get_option("--run")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    corr->get_option("--metrics")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    app.clear();
    c = Config{};
    std::reverse(merged.begin(), merged.end());
    try {
      app.parse(merged);
    } catch (const CLI::ParseError& e) {
      return app.exit(e);
    }
  }

  const std::string name = app.get_subcommands().front()->get_name();
  if (name == "prep") return RunPrep(c);
  if (name == "polyrep") return RunPolyrep(c);
  if (name == "evaluate") return RunEvaluate(c);
  return RunCorrelate(c);
}

}  // namespace
}  // namespace polyrep

int main(int argc, char** argv) {
  try {
    return polyrep::Main(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "polyrep: " << e.what() << "\n";
    return 1;
  }
}
