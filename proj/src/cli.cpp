/*
 * Copyright 2026 The prefeval Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "prefeval/cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>

#include "CLI11.hpp"
#include "prefeval/data_io.hpp"
#include "prefeval/error.hpp"
#include "prefeval/metrics.hpp"
#include "prefeval/preference.hpp"
#include "prefeval/study_sim.hpp"

#ifndef PREFEVAL_VERSION
#define PREFEVAL_VERSION "0.0.0"
#endif

namespace prefeval::cli {

namespace {

namespace fs = std::filesystem;

// Raised for bad flag values; maps to exit code 1.
struct UsageError {
  std::string message;
};

// Raised for problems in input data; maps to exit code 2.
struct DataError {
  std::string message;
};

int ParsePositive(std::string_view text) {
  int value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || value < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "'" + std::string(text) + "' is not a positive integer");
  }
  return value;
}

std::vector<std::string_view> SplitComma(std::string_view text) {
  std::vector<std::string_view> parts;
  for (;;) {
    const auto comma = text.find(',');
    parts.push_back(text.substr(0, comma));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return parts;
}

std::string Real(double value) {
  std::ostringstream s;
  s << value;
  return s.str();
}

template <typename Fn>
auto Usage(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw UsageError{e.what()};
  }
}

// Loads one input file, prefixing any error with the path.
template <typename Fn>
auto LoadFile(const std::string& path, Fn&& parse) {
  try {
    std::istringstream in(ReadFile(path));
    return parse(in);
  } catch (const Error& e) {
    std::string where = path;
    if (e.line() > 0) where += ":" + std::to_string(e.line());
    throw DataError{where + ": " + e.what()};
  }
}

struct InputPaths {
  std::string judgments;
  std::string runs;
  std::string prefs;
  std::string scale = "school6";
  double default_grade = 0.0;
};

void AddInputOptions(CLI::App* cmd, InputPaths* paths, bool with_prefs) {
  cmd->add_option("--judgments", paths->judgments,
                  "Relevance judgments (query, doc, grade)")
      ->required();
  cmd->add_option("--runs", paths->runs,
                  "Ranked runs (query, list, rank, doc)")
      ->required();
  if (with_prefs) {
    cmd->add_option("--prefs", paths->prefs,
                    "Preference judgments (query, verdict)")
        ->required();
  }
  cmd->add_option("--scale", paths->scale, "Grade scale: school6 or unit")
      ->capture_default_str();
  cmd->add_option("--default-grade", paths->default_grade,
                  "Grade for unjudged documents")
      ->capture_default_str();
}

JudgmentSet LoadJudgments(const InputPaths& paths) {
  const GradeScale scale = Usage([&] { return ParseGradeScale(paths.scale); });
  const RelevanceGrade fallback =
      Usage([&] { return RelevanceGrade(paths.default_grade); });
  return LoadFile(paths.judgments, [&](std::istream& in) {
    return ParseJudgments(in, scale, fallback);
  });
}

std::vector<RankedList> LoadRuns(const InputPaths& paths) {
  return LoadFile(paths.runs,
                  [](std::istream& in) { return ParseRuns(in); });
}

StudyBundle LoadBundle(const InputPaths& paths) {
  StudyBundle bundle;
  bundle.judgments = LoadJudgments(paths);
  const auto lists = LoadRuns(paths);
  bundle.prefs = LoadFile(
      paths.prefs, [](std::istream& in) { return ParsePreferences(in); });
  try {
    bundle.pairs = PairLists(lists);
    ValidateBundle(bundle);
  } catch (const Error& e) {
    throw DataError{paths.runs + ": " + e.what()};
  }
  return bundle;
}

void Emit(const std::string& path, const std::string& contents,
          std::ostream& out) {
  if (path.empty() || path == "-") {
    out << contents;
    return;
  }
  try {
    WriteFileAtomic(path, contents);
  } catch (const Error& e) {
    throw DataError{e.what()};
  }
}

// ---------------------------------------------------------------- metrics

struct MetricsArgs {
  InputPaths paths;
  std::string metrics = "precision,ap,ndcg";
  std::string cutoffs = "1-10";
  double log_base = MetricKind::kDefaultLogBase;
  std::string out;
};

int RunMetrics(const MetricsArgs& args, std::ostream& out,
               std::ostream& err) {
  const auto kinds =
      Usage([&] { return ParseMetricList(args.metrics, args.log_base); });
  const auto cutoffs = Usage([&] { return ParseCutoffList(args.cutoffs); });
  const JudgmentSet judgments = LoadJudgments(args.paths);
  const auto lists = LoadRuns(args.paths);

  std::map<std::string, std::vector<RankedList>> by_query;
  for (const auto& list : lists) by_query[list.query_id].push_back(list);

  // (list, metric label, cutoff) -> query -> value, for the "all" rows.
  std::map<std::tuple<std::string, std::string, int>,
           std::map<std::string, double>>
      per_query;
  std::vector<std::tuple<std::string, std::string, int>> order;
  EvalStats stats;
  std::size_t undefined = 0;
  std::ostringstream table;
  table << "query,list,metric,cutoff,value\n";
  for (const auto& [query, group] : by_query) {
    const auto pool = CandidatePool(group);
    for (const auto& list : group) {
      for (const auto& kind : kinds) {
        for (const auto& k : cutoffs) {
          const std::string label = MetricLabel(kind);
          table << query << ',' << list.list_id << ',' << label << ','
                << k.value() << ',';
          auto key = std::make_tuple(list.list_id, label, k.value());
          if (!per_query.count(key)) order.push_back(key);
          auto& bucket = per_query[key];
          try {
            const double value =
                MetricEval(kind, list, judgments, pool, k, &stats);
            bucket[query] = value;
            table << FormatFixed6(value) << '\n';
          } catch (const Error& e) {
            if (e.code() != ErrorCode::kIdealGainZero) throw;
            ++undefined;
            table << "NA\n";
          }
        }
      }
    }
  }
  std::sort(order.begin(), order.end());
  for (const auto& key : order) {
    const auto& bucket = per_query[key];
    table << "all," << std::get<0>(key) << ',' << std::get<1>(key) << ','
          << std::get<2>(key) << ',';
    if (bucket.empty()) {
      table << "NA\n";
    } else {
      table << FormatFixed6(MeanOverQueries(bucket)) << '\n';
    }
  }
  Emit(args.out, table.str(), out);
  err << "unjudged lookups: " << stats.unjudged
      << ", undefined values: " << undefined << '\n';
  return kExitOk;
}

// -------------------------------------------------------------------- pir

struct PirArgs {
  InputPaths paths;
  std::string metric = "ndcg";
  int cutoff = 10;
  double threshold = 0.0;
  double log_base = MetricKind::kDefaultLogBase;
  bool ties_in_denominator = false;
};

int RunPir(const PirArgs& args, std::ostream& out, std::ostream& err) {
  const MetricKind kind =
      Usage([&] { return MetricKind::Parse(args.metric, args.log_base); });
  const Cutoff k = Usage([&] { return Cutoff(args.cutoff); });
  if (!(args.threshold >= 0.0)) throw UsageError{"--threshold must be >= 0"};
  const StudyBundle bundle = LoadBundle(args.paths);

  std::map<std::string, double> deltas;
  PreferenceMap prefs;
  std::size_t dropped = 0;
  std::size_t ties = 0;
  for (const auto& pair : bundle.pairs) {
    const Verdict verdict = bundle.prefs.at(pair.query_id);
    if (verdict == Verdict::kTie) {
      ++ties;
      prefs[pair.query_id] = verdict;
      continue;
    }
    try {
      deltas[pair.query_id] = MetricDelta(pair, bundle.judgments, kind, k);
      prefs[pair.query_id] = verdict;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kIdealGainZero) throw;
      ++dropped;
    }
  }
  PirOptions options;
  options.ties_in_denominator = args.ties_in_denominator;
  double pir = 0.0;
  try {
    pir = Pir(deltas, prefs, args.threshold, options);
  } catch (const Error& e) {
    throw DataError{e.what()};
  }
  out << "metric,cutoff,threshold,pir,preferences,ties,dropped\n"
      << MetricLabel(kind) << ',' << k.value() << ','
      << FormatFixed6(args.threshold) << ',' << FormatFixed6(pir) << ','
      << deltas.size() << ',' << ties << ',' << dropped << '\n';
  if (dropped > 0) {
    err << "dropped " << dropped << " queries with zero ideal gain\n";
  }
  return kExitOk;
}

// ------------------------------------------------------------------ sweep

struct SweepArgs {
  InputPaths paths;
  std::string metrics = "precision,ap,ndcg";
  std::string cutoffs = "1-10";
  double threshold_step = 0.01;
  std::optional<double> threshold_max;
  double log_base = MetricKind::kDefaultLogBase;
  bool ties_in_denominator = false;
  std::string out;
  std::string format;
};

int RunSweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  SweepGrid grid;
  grid.metrics =
      Usage([&] { return ParseMetricList(args.metrics, args.log_base); });
  grid.cutoffs = Usage([&] { return ParseCutoffList(args.cutoffs); });
  grid.threshold_step = args.threshold_step;
  grid.threshold_max = args.threshold_max;
  Usage([&] {
    GridThresholds(grid.threshold_step, grid.threshold_max.value_or(0.0));
    return 0;
  });
  std::string format_name = args.format;
  if (format_name.empty()) {
    format_name = fs::path(args.out).extension() == ".json" ? "json" : "csv";
  }
  const ReportFormat format =
      Usage([&] { return ParseReportFormat(format_name); });
  PirOptions options;
  options.ties_in_denominator = args.ties_in_denominator;

  const StudyBundle bundle = LoadBundle(args.paths);
  SweepResult result;
  try {
    result = PirProfile(bundle.pairs, bundle.judgments, bundle.prefs, grid,
                        options);
  } catch (const Error& e) {
    throw DataError{e.what()};
  }

  const ReportMeta meta = {
      {"tool", std::string("prefeval ") + PREFEVAL_VERSION},
      {"judgments", args.paths.judgments},
      {"runs", args.paths.runs},
      {"prefs", args.paths.prefs},
      {"scale", args.paths.scale},
      {"metrics", args.metrics},
      {"cutoffs", args.cutoffs},
      {"log_base", Real(args.log_base)},
      {"threshold_step", Real(args.threshold_step)},
      {"threshold_max",
       args.threshold_max ? Real(*args.threshold_max) : std::string("auto")},
      {"ties_in_denominator", args.ties_in_denominator ? "true" : "false"},
  };
  std::ostringstream report;
  WriteReport(report, result, format, &meta);
  Emit(args.out, report.str(), out);

  if (!args.out.empty() && args.out != "-") {
    out << "metric\tcutoff\tbest_threshold\tpir\n";
    for (const auto& [key, cell] : result.cells) {
      out << MetricLabel(key.metric) << '\t' << key.cutoff.value() << '\t';
      if (cell.best) {
        out << FormatFixed6(cell.best->threshold) << '\t'
            << FormatFixed6(cell.best->pir) << '\n';
      } else {
        out << "NA\tNA\n";
      }
    }
  }
  for (const auto& [key, cell] : result.cells) {
    if (!cell.error.empty()) {
      err << MetricLabel(key.metric) << '@' << key.cutoff.value() << ": "
          << cell.error << '\n';
    }
  }
  return kExitOk;
}

// --------------------------------------------------------------- simulate

struct SimulateArgs {
  SimConfig config;
  std::string utility = "cg";
  double log_base = MetricKind::kDefaultLogBase;
  std::string out;
};

int RunSimulate(const SimulateArgs& args, std::ostream& out) {
  SimConfig config = args.config;
  config.utility =
      Usage([&] { return MetricKind::Parse(args.utility, args.log_base); });
  Usage([&] {
    ValidateSimConfig(config);
    return 0;
  });
  const SimulatedStudy study = GenerateStudy(config);

  std::ostringstream header;
  header << "# prefeval " << PREFEVAL_VERSION << " simulate\n"
         << "# prng: " << kSimulatorPrng << " seed=" << config.seed << '\n'
         << "# queries=" << config.num_queries
         << " docs=" << config.docs_per_query
         << " grade_noise=" << config.grade_noise
         << " engine_noise=" << config.engine_noise
         << " depth=" << config.persistence_depth
         << " tie_margin=" << config.tie_margin
         << " utility=" << MetricLabel(config.utility)
         << " relevance_a=" << config.relevance_a
         << " relevance_b=" << config.relevance_b << '\n';

  std::ostringstream judgments;
  std::ostringstream runs;
  std::ostringstream prefs;
  judgments << header.str();
  runs << header.str();
  prefs << header.str();
  WriteJudgments(judgments, study.bundle.judgments, GradeScale::kSchool6);
  WriteRuns(runs, FlattenPairs(study.bundle.pairs));
  WritePreferences(prefs, study.bundle.prefs);

  const fs::path dir(args.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw DataError{"cannot create directory " + dir.string()};
  Emit((dir / "judgments.tsv").string(), judgments.str(), out);
  Emit((dir / "runs.tsv").string(), runs.str(), out);
  Emit((dir / "prefs.tsv").string(), prefs.str(), out);

  std::size_t first = 0;
  std::size_t second = 0;
  std::size_t tie = 0;
  for (const auto& [query, verdict] : study.bundle.prefs) {
    if (verdict == Verdict::kFirst) ++first;
    if (verdict == Verdict::kSecond) ++second;
    if (verdict == Verdict::kTie) ++tie;
  }
  out << "wrote " << config.num_queries << " queries to " << dir.string()
      << " (FIRST " << first << ", SECOND " << second << ", TIE " << tie
      << ")\n";
  return kExitOk;
}

}  // namespace

std::vector<Cutoff> ParseCutoffList(const std::string& text) {
  std::vector<Cutoff> cutoffs;
  for (std::string_view part : SplitComma(text)) {
    if (part.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "empty entry in cutoff list '" + text + "'");
    }
    const auto dash = part.find('-');
    if (dash == std::string_view::npos) {
      cutoffs.emplace_back(ParsePositive(part));
      continue;
    }
    const int lo = ParsePositive(part.substr(0, dash));
    const int hi = ParsePositive(part.substr(dash + 1));
    if (hi < lo) {
      throw Error(ErrorCode::kInvalidArgument,
                  "descending cutoff range '" + std::string(part) + "'");
    }
    for (int k = lo; k <= hi; ++k) cutoffs.emplace_back(k);
  }
  std::sort(cutoffs.begin(), cutoffs.end());
  cutoffs.erase(std::unique(cutoffs.begin(), cutoffs.end()), cutoffs.end());
  return cutoffs;
}

std::vector<MetricKind> ParseMetricList(const std::string& text,
                                        double log_base) {
  std::vector<MetricKind> kinds;
  for (std::string_view part : SplitComma(text)) {
    const MetricKind kind = MetricKind::Parse(part, log_base);
    if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) {
      kinds.push_back(kind);
    }
  }
  return kinds;
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Graded relevance metrics and preference identification "
               "ratio sweeps"};
  app.name(args.empty() ? "prefeval" : fs::path(args[0]).filename().string());
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(PREFEVAL_VERSION));

  MetricsArgs metrics_args;
  auto* metrics_cmd =
      app.add_subcommand("metrics", "Per-list metric values table");
  AddInputOptions(metrics_cmd, &metrics_args.paths, false);
  metrics_cmd->add_option("--metrics", metrics_args.metrics)
      ->capture_default_str();
  metrics_cmd->add_option("--cutoffs", metrics_args.cutoffs)
      ->capture_default_str();
  metrics_cmd->add_option("--log-base", metrics_args.log_base)
      ->capture_default_str();
  metrics_cmd->add_option("--out", metrics_args.out, "Output CSV (default stdout)");

  PirArgs pir_args;
  auto* pir_cmd = app.add_subcommand("pir", "PIR at a single threshold");
  AddInputOptions(pir_cmd, &pir_args.paths, true);
  pir_cmd->add_option("--metric", pir_args.metric)->capture_default_str();
  pir_cmd->add_option("--cutoff", pir_args.cutoff)->capture_default_str();
  pir_cmd->add_option("--threshold", pir_args.threshold)
      ->capture_default_str();
  pir_cmd->add_option("--log-base", pir_args.log_base)->capture_default_str();
  pir_cmd->add_flag("--ties-in-denominator", pir_args.ties_in_denominator,
                    "Count TIE verdicts in the PIR denominator");

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "PIR over metric x cutoff x threshold, with best thresholds");
  AddInputOptions(sweep_cmd, &sweep_args.paths, true);
  sweep_cmd->add_option("--metrics", sweep_args.metrics)
      ->capture_default_str();
  sweep_cmd->add_option("--cutoffs", sweep_args.cutoffs)
      ->capture_default_str();
  sweep_cmd->add_option("--threshold-step", sweep_args.threshold_step)
      ->capture_default_str();
  sweep_cmd->add_option("--threshold-max", sweep_args.threshold_max,
                        "Default: 1 for precision/ap/ndcg, max |delta| "
                        "for cg/dcg");
  sweep_cmd->add_option("--log-base", sweep_args.log_base)
      ->capture_default_str();
  sweep_cmd->add_flag("--ties-in-denominator", sweep_args.ties_in_denominator,
                      "Count TIE verdicts in the PIR denominator");
  sweep_cmd->add_option("--out", sweep_args.out,
                        "Report path (default stdout)");
  sweep_cmd->add_option("--format", sweep_args.format,
                        "csv or json (default from --out extension)");

  SimulateArgs sim_args;
  auto* sim_cmd =
      app.add_subcommand("simulate", "Write a seeded synthetic study");
  sim_cmd->add_option("--seed", sim_args.config.seed)->capture_default_str();
  sim_cmd->add_option("--queries", sim_args.config.num_queries)
      ->capture_default_str();
  sim_cmd->add_option("--docs", sim_args.config.docs_per_query)
      ->capture_default_str();
  sim_cmd->add_option("--grade-noise", sim_args.config.grade_noise)
      ->capture_default_str();
  sim_cmd->add_option("--engine-noise", sim_args.config.engine_noise)
      ->capture_default_str();
  sim_cmd->add_option("--depth", sim_args.config.persistence_depth,
                      "Ranks considered by the simulated preference")
      ->capture_default_str();
  sim_cmd->add_option("--tie-margin", sim_args.config.tie_margin)
      ->capture_default_str();
  sim_cmd->add_option("--utility", sim_args.utility,
                      "Metric driving the simulated preference")
      ->capture_default_str();
  sim_cmd->add_option("--log-base", sim_args.log_base)->capture_default_str();
  sim_cmd->add_option("--relevance-a", sim_args.config.relevance_a)
      ->capture_default_str();
  sim_cmd->add_option("--relevance-b", sim_args.config.relevance_b)
      ->capture_default_str();
  sim_cmd->add_option("--out", sim_args.out, "Output directory")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("prefeval");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << PREFEVAL_VERSION << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << app.get_name() << ": " << e.what() << '\n'
        << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*metrics_cmd) return RunMetrics(metrics_args, out, err);
    if (*pir_cmd) return RunPir(pir_args, out, err);
    if (*sweep_cmd) return RunSweep(sweep_args, out, err);
    if (*sim_cmd) return RunSimulate(sim_args, out);
  } catch (const UsageError& e) {
    err << app.get_name() << ": " << e.message << '\n';
    return kExitUsage;
  } catch (const DataError& e) {
    err << app.get_name() << ": " << e.message << '\n';
    return kExitData;
  } catch (const Error& e) {
    err << app.get_name() << ": " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace prefeval::cli
