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

// Command-line front end: normalize, build-dict, match, evaluate, run and
// review serve.

#include <csignal>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "namelink/analyzer.h"
#include "namelink/config.h"
#include "namelink/dataset_io.h"
#include "namelink/dictionary.h"
#include "namelink/match_engine.h"
#include "namelink/metrics.h"
#include "namelink/phonetic.h"
#include "namelink/pipeline.h"
#include "namelink/results_io.h"
#include "namelink/review_service.h"

namespace {

using namespace namelink;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitData = 2;

namelink::ReviewServer* g_server = nullptr;

void PrintDiagnostics(const Diagnostics& diag) {
  for (const Diagnostic& d : diag.entries()) {
    std::cerr << "warning: " << ErrorCodeName(d.code) << ": " << d.message
              << "\n";
  }
}

int ExitCodeFor(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kConfigError:
    case ErrorCode::kUnknownBlockField:
      return kExitConfig;
    default:
      return kExitData;
  }
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << text;
}

std::string CodesFor(const NameToken& token, const CodeTable& codes,
                     Diagnostics* diag) {
  std::string out;
  for (const CombinedSoundexCode& c :
       CombinedSoundexVariants(token, codes, diag)) {
    if (!out.empty()) out += ',';
    out += c.str();
  }
  return out;
}

struct NormalizeArgs {
  std::vector<std::string> names;
  std::string order = "first_name_first";
  std::string prefixes;
  bool tokens = false;
  bool codes = false;
};

int RunNormalize(const NormalizeArgs& args, Diagnostics* diag) {
  NameOrder order = ParseNameOrder(args.order);
  PrefixTable prefixes = args.prefixes.empty() ? PrefixTable::Builtin()
                                               : PrefixTable::Load(args.prefixes);
  NameAnalyzer analyzer(std::move(prefixes), CodeTable::Builtin());
  std::vector<std::string> names = args.names;
  if (names.empty()) {
    for (std::string line; std::getline(std::cin, line);) {
      if (!line.empty()) names.push_back(line);
    }
  }
  int status = kExitOk;
  for (const std::string& name : names) {
    try {
      if (!args.tokens && !args.codes) {
        std::cout << analyzer.NormalizeText(name).text << "\n";
        continue;
      }
      ParsedName parsed = analyzer.Analyze(name, order, diag);
      std::string line;
      for (const NameToken& token : parsed.tokens) {
        if (!line.empty()) line += " | ";
        line += token.canonical;
        if (args.codes) {
          line += " [" + CodesFor(token, analyzer.codes(), diag) + "]";
        }
      }
      std::cout << line << "\n";
    } catch (const Error& e) {
      std::cerr << "error: " << ErrorCodeName(e.code()) << ": " << e.what()
                << "\n";
      status = kExitData;
    }
  }
  return status;
}

struct BuildDictArgs {
  std::string pairs;
  std::string strategy = "combined";
  std::string out;
  std::string edits;
  std::string latin_order = "first_name_first";
  std::string arabic_column = "arabic";
  std::string latin_column = "latin";
  std::string prefixes;
};

int RunBuildDict(const BuildDictArgs& args, Diagnostics* diag) {
  PipelineConfig config;
  config.dictionary_pairs = args.pairs;
  config.dictionary_path = args.out;
  config.dictionary_edits = args.edits;
  config.dictionary_strategy = ParseDictionaryStrategy(args.strategy);
  config.pairs_latin_order = ParseNameOrder(args.latin_order);
  config.pairs_arabic_column = args.arabic_column;
  config.pairs_latin_column = args.latin_column;
  config.prefixes_path = args.prefixes;
  if (config.dictionary_strategy == DictionaryStrategy::kVerified &&
      args.edits.empty()) {
    throw Error(ErrorCode::kConfigError,
                "--strategy verified needs --edits");
  }
  NameAnalyzer analyzer = MakeAnalyzer(config);
  Dictionary dict = PrepareDictionary(config, analyzer, diag);
  std::cerr << dict.size() << " entries written to " << args.out << "\n";
  return kExitOk;
}

struct MatchArgs {
  std::string src, dst, dict, out, review_queue;
  std::vector<std::string> block;
  std::string src_id = "id", src_name = "name", src_order = "auto";
  std::string dst_id = "id", dst_name = "name",
              dst_order = "first_name_first";
  double threshold = 0.85;
  double floor = 0.4;
  size_t max_edit_distance = 2;
  std::string relax_order = "paper_order";
  size_t threads = 0;
  bool no_verify = false;
};

int RunMatch(const MatchArgs& args, Diagnostics* diag) {
  PipelineConfig config;
  config.source.path = args.src;
  config.source.id_column = args.src_id;
  config.source.name_column = args.src_name;
  config.source.order = ParseNameOrder(args.src_order);
  config.destination.path = args.dst;
  config.destination.id_column = args.dst_id;
  config.destination.name_column = args.dst_name;
  config.destination.order = ParseNameOrder(args.dst_order);
  config.dictionary_path = args.dict;
  config.block = args.block;
  config.match.match_threshold = args.threshold;
  config.match.floor = args.floor;
  config.match.max_edit_distance = args.max_edit_distance;
  config.match.relax_order = ParseRelaxOrder(args.relax_order);
  config.match.threads = args.threads;
  config.match.verify_reverse = !args.no_verify;
  config.results_path = args.out;
  config.review_queue_path = args.review_queue;
  PipelineResult result = RunPipeline(config, diag);
  size_t matches = 0;
  for (const MatchDecision& d : result.decisions) {
    if (d.outcome == Outcome::kMatch) ++matches;
  }
  std::cerr << result.decisions.size() << " sources: " << matches
            << " matched, " << result.review_items << " for review\n";
  return kExitOk;
}

struct EvaluateArgs {
  std::string machine, expert, matrix, report;
  uint64_t total = 0;
};

int RunEvaluate(const EvaluateArgs& args, Diagnostics* diag) {
  ConfusionMatrix m;
  if (!args.matrix.empty()) {
    std::ifstream in(args.matrix, std::ios::binary);
    if (!in) throw Error(ErrorCode::kIoError, "cannot open " + args.matrix);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    m = MatrixFromJson(text);
  } else {
    if (args.machine.empty() || args.expert.empty()) {
      throw Error(ErrorCode::kConfigError,
                  "evaluate needs --machine and --expert, or --matrix");
    }
    m = BuildMatrix(LoadResults(args.machine),
                    LoadExpertLabels(args.expert, diag));
  }
  if (args.total != 0) m.set_declared_total(args.total);
  MetricsReport report = ComputeReport(m);
  std::string json = ReportToJson(report, m);
  if (args.report.empty()) {
    std::cout << json;
  } else {
    WriteFile(args.report, json);
    std::cout << "TPP " << FormatPercent(report.tpp) << "  FPP "
              << FormatPercent(report.fpp) << "  VTNP "
              << FormatPercent(report.vtnp) << "  FNP "
              << FormatPercent(report.fnp) << "  ETPAP "
              << FormatPercent(report.etpap) << "  OTPA "
              << FormatPercent(report.otpa) << "\n";
  }
  return kExitOk;
}

struct ReviewArgs {
  std::string config;
  std::string results;
  std::string labels;
  std::string journal;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string static_dir;
};

int RunReviewServe(ReviewArgs args, Diagnostics* diag) {
  if (!args.config.empty()) {
    PipelineConfig config = LoadConfig(args.config);
    if (args.results.empty()) {
      args.results = config.review_queue_path.empty() ? config.results_path
                                                      : config.results_path;
    }
    if (args.labels.empty()) args.labels = config.expert_labels;
    if (args.journal.empty()) args.journal = config.review_journal;
    if (args.static_dir.empty()) args.static_dir = config.review_static_dir;
    args.host = config.review_host;
    args.port = config.review_port;
  }
  if (args.results.empty()) {
    throw Error(ErrorCode::kConfigError, "review serve needs --results");
  }
  ExpertLabels labels;
  if (!args.labels.empty()) labels = LoadExpertLabels(args.labels, diag);
  ReviewQueue queue(LoadResults(args.results), std::move(labels),
                    args.journal);
  ReviewServer server(queue, args.static_dir);
  int port = server.Bind(args.host, args.port);
  std::cerr << "reviewing " << queue.size() << " pairs on http://"
            << args.host << ":" << port << "\n";
  g_server = &server;
  std::signal(SIGINT, [](int) {
    if (g_server != nullptr) g_server->Stop();
  });
  std::signal(SIGTERM, [](int) {
    if (g_server != nullptr) g_server->Stop();
  });
  server.Serve();
  g_server = nullptr;
  return kExitOk;
}

int RunConfigured(const std::string& path, Diagnostics* diag) {
  PipelineConfig config = LoadConfig(path);
  PipelineResult result = RunPipeline(config, diag);
  std::cerr << result.decisions.size() << " sources, " << result.review_items
            << " for review\n";
  if (result.report) {
    std::cout << "TPP " << FormatPercent(result.report->tpp) << "  OTPA "
              << FormatPercent(result.report->otpa) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arabic/Latin personal-name record linkage"};
  app.require_subcommand(1);

  NormalizeArgs normalize;
  CLI::App* cmd_normalize =
      app.add_subcommand("normalize", "Normalize and parse names");
  cmd_normalize->add_option("names", normalize.names,
                            "Names to normalize (default: stdin lines)");
  cmd_normalize->add_option("--order", normalize.order,
                            "first_name_first, last_name_first or auto");
  cmd_normalize->add_option("--prefixes", normalize.prefixes,
                            "Prefix table TSV");
  cmd_normalize->add_flag("--tokens", normalize.tokens,
                          "Print canonical tokens separated by |");
  cmd_normalize->add_flag("--codes", normalize.codes,
                          "Also print combined Soundex codes per token");

  BuildDictArgs build;
  CLI::App* cmd_build =
      app.add_subcommand("build-dict", "Build an Arabic/Latin dictionary");
  cmd_build->add_option("--pairs", build.pairs, "CSV/TSV of name pairs")
      ->required();
  cmd_build->add_option("--strategy", build.strategy)
      ->check(CLI::IsMember({"source", "soundex", "combined", "verified"}));
  cmd_build->add_option("--out", build.out, "Dictionary TSV")->required();
  cmd_build->add_option("--edits", build.edits, "Expert edits TSV");
  cmd_build->add_option("--latin-order", build.latin_order);
  cmd_build->add_option("--arabic-column", build.arabic_column);
  cmd_build->add_option("--latin-column", build.latin_column);
  cmd_build->add_option("--prefixes", build.prefixes, "Prefix table TSV");

  MatchArgs match;
  CLI::App* cmd_match = app.add_subcommand("match", "Match two datasets");
  cmd_match->add_option("--src", match.src, "Source CSV/TSV")->required();
  cmd_match->add_option("--dst", match.dst, "Destination CSV/TSV")
      ->required();
  cmd_match->add_option("--dict", match.dict, "Dictionary TSV")->required();
  cmd_match->add_option("--block", match.block, "Blocking field")
      ->delimiter(',');
  cmd_match->add_option("--out", match.out, "Results JSON")->required();
  cmd_match->add_option("--review-queue", match.review_queue);
  cmd_match->add_option("--src-id-column", match.src_id);
  cmd_match->add_option("--src-name-column", match.src_name);
  cmd_match->add_option("--src-order", match.src_order);
  cmd_match->add_option("--dst-id-column", match.dst_id);
  cmd_match->add_option("--dst-name-column", match.dst_name);
  cmd_match->add_option("--dst-order", match.dst_order);
  cmd_match->add_option("--threshold", match.threshold);
  cmd_match->add_option("--floor", match.floor);
  cmd_match->add_option("--max-edit-distance", match.max_edit_distance);
  cmd_match->add_option("--relax-order", match.relax_order);
  cmd_match->add_option("--threads", match.threads);
  cmd_match->add_flag("--no-verify", match.no_verify,
                      "Skip reverse dictionary verification");

  EvaluateArgs evaluate;
  CLI::App* cmd_evaluate =
      app.add_subcommand("evaluate", "Compute quality metrics");
  cmd_evaluate->add_option("--machine", evaluate.machine, "Results JSON");
  cmd_evaluate->add_option("--expert", evaluate.expert, "Expert labels CSV");
  cmd_evaluate->add_option("--matrix", evaluate.matrix,
                           "Confusion matrix JSON instead of results");
  cmd_evaluate->add_option("--total", evaluate.total,
                           "Declared number of source records");
  cmd_evaluate->add_option("--report", evaluate.report, "Report JSON");

  std::string run_config;
  CLI::App* cmd_run = app.add_subcommand("run", "Run a configured pipeline");
  cmd_run->add_option("--config", run_config, "Pipeline config")->required();

  ReviewArgs review;
  CLI::App* cmd_review = app.add_subcommand("review", "Clerical review");
  cmd_review->require_subcommand(1);
  CLI::App* cmd_serve =
      cmd_review->add_subcommand("serve", "Serve the review API");
  cmd_serve->add_option("--config", review.config, "Pipeline config");
  cmd_serve->add_option("--results", review.results, "Results JSON");
  cmd_serve->add_option("--labels", review.labels, "Expert labels CSV");
  cmd_serve->add_option("--journal", review.journal, "Decision journal");
  cmd_serve->add_option("--host", review.host);
  cmd_serve->add_option("--port", review.port);
  cmd_serve->add_option("--static-dir", review.static_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  Diagnostics diag;
  int status = kExitOk;
  try {
    if (cmd_normalize->parsed()) status = RunNormalize(normalize, &diag);
    if (cmd_build->parsed()) status = RunBuildDict(build, &diag);
    if (cmd_match->parsed()) status = RunMatch(match, &diag);
    if (cmd_evaluate->parsed()) status = RunEvaluate(evaluate, &diag);
    if (cmd_run->parsed()) status = RunConfigured(run_config, &diag);
    if (cmd_serve->parsed()) status = RunReviewServe(review, &diag);
  } catch (const Error& e) {
    PrintDiagnostics(diag);
    std::cerr << "error: " << ErrorCodeName(e.code()) << ": " << e.what()
              << "\n";
    return ExitCodeFor(e);
  }
  PrintDiagnostics(diag);
  return status;
}
