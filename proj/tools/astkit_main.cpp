// Copyright 2026 The Astkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// astkit: single entry-point binary for the HLS-C AST toolkit.
//
// Exit codes: 0 success, 1 domain error (astkit::Error), 2 usage error.

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "astkit/ast.h"
#include "astkit/cfg.h"
#include "astkit/config.h"
#include "astkit/dataset.h"
#include "astkit/error.h"
#include "astkit/eval.h"
#include "astkit/optimize.h"
#include "astkit/parser.h"
#include "astkit/serialize.h"
#include "astkit/source.h"
#include "astkit/toolbridge.h"
#include "nlohmann/json.hpp"
#include "src/internal/template_io.h"

namespace {

using astkit::AstNode;
using astkit::Error;
using astkit::ErrorCode;
using astkit::GlobalConfig;

struct CommonArgs {
  std::string config_path;
  bool version = false;
};

GlobalConfig LoadGlobalConfig(const CommonArgs& args) {
  GlobalConfig config = args.config_path.empty()
                            ? astkit::DefaultConfig()
                            : astkit::LoadConfig(args.config_path);
  astkit::ApplyEnvOverrides(config);
  config.Validate();
  return config;
}

std::string TemplateVersionOrUnknown(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return "missing";
  return astkit::internal::TemplateVersion(path);
}

void PrintVersion(const GlobalConfig& config) {
  std::cout << "astkit " << astkit::kToolkitVersion << " (porting template "
            << TemplateVersionOrUnknown(config.PortingTemplatePath())
            << ", testbench template "
            << TemplateVersionOrUnknown(config.TestbenchTemplatePath())
            << ")\n";
}

// Parses `file` and returns the tree; when `top` is non-empty the named
// FunctionDef subtree is copied out instead.
AstNode ParseSelection(const std::string& file, const std::string& top) {
  astkit::SourceFile src = astkit::SourceFile::Load(file);
  AstNode tree = astkit::Parse(src);
  if (top.empty()) return tree;
  return astkit::FindFunction(tree, top);
}

const astkit::ToolAdapter& RequireAdapter(const GlobalConfig& config,
                                          astkit::ToolAdapter::Kind kind,
                                          std::string_view what) {
  const astkit::ToolAdapter* adapter = config.FindAdapter(kind);
  if (adapter == nullptr) {
    throw Error(ErrorCode::kInvalidConfig,
                "config declares no " + std::string(what) + " adapter");
  }
  return *adapter;
}

int RunParse(const CommonArgs& common, const std::string& file,
             const std::string& top, bool dump_json) {
  LoadGlobalConfig(common);
  AstNode tree = ParseSelection(file, top);
  if (dump_json) {
    std::cout << astkit::ToJson(tree) << "\n";
  } else {
    std::string text = astkit::PrettyPrint(tree);
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  }
  return 0;
}

int RunOptimize(const CommonArgs& common, const std::string& file,
                const std::string& top, bool dump_json) {
  GlobalConfig config = LoadGlobalConfig(common);
  AstNode tree = ParseSelection(file, top);
  AstNode optimized = astkit::Optimize(tree, config.optimize);
  if (dump_json) {
    std::cout << astkit::ToJson(optimized) << "\n";
  } else {
    std::string text = astkit::PrettyPrint(optimized);
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  }
  return 0;
}

int RunCfg(const CommonArgs& common, const std::string& file,
           const std::string& top, const std::string& format) {
  LoadGlobalConfig(common);
  AstNode tree = ParseSelection(file, top);
  astkit::Cfg cfg = astkit::AnalyzeControlFlow(tree);
  if (format == "json") {
    std::cout << astkit::ToJson(cfg) << "\n";
  } else {
    std::cout << astkit::ToDot(cfg, tree);
  }
  return 0;
}

int RunSerialize(const CommonArgs& common, const std::string& file,
                 const std::string& top, bool indent, bool with_cfg) {
  GlobalConfig config = LoadGlobalConfig(common);
  astkit::SourceFile src = astkit::SourceFile::Load(file);
  AstNode tree = astkit::Parse(src);
  const AstNode& function = astkit::FindFunction(tree, top);
  AstNode optimized = astkit::Optimize(function, config.optimize);
  astkit::SerializeOptions options;
  options.indent = indent;
  astkit::SerializedAst serialized = astkit::Serialize(optimized, options);
  std::cout << serialized.text << "\n";
  if (with_cfg) {
    astkit::Cfg cfg = astkit::AnalyzeControlFlow(optimized);
    std::cout << "\n" << astkit::ToDot(cfg, optimized);
  }
  return 0;
}

int RunPort(const CommonArgs& common, const std::string& file) {
  GlobalConfig config = LoadGlobalConfig(common);
  astkit::SourceFile verilog = astkit::SourceFile::Load(file);
  std::vector<astkit::ChatMessage> prompt =
      astkit::BuildPortingPrompt(verilog.text, config.PortingTemplatePath());
  astkit::LlmClient llm(RequireAdapter(config, astkit::ToolAdapter::Kind::kLlm,
                                       "llm"));
  std::string response = llm.Chat(prompt);
  astkit::PortingResponse ported = astkit::ParsePortingResponse(response);
  nlohmann::ordered_json out;
  out["source_id"] = std::filesystem::path(file).stem().string();
  out["instruction"] = ported.instruction;
  out["code"] = ported.hls_code;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int RunDatasetBuildCmd(const CommonArgs& common, const std::string& corpus,
                       const std::string& out, const std::string& ledger,
                       const std::string& eval_instructions_path) {
  GlobalConfig config = LoadGlobalConfig(common);
  astkit::PipelineOptions opts;
  opts.corpus_dir = corpus;
  opts.out_path = out;
  if (!ledger.empty()) opts.ledger_path = ledger;
  opts.workdir_root = config.workdir_root;
  opts.porting_template = config.PortingTemplatePath();
  if (!eval_instructions_path.empty()) {
    opts.eval_instructions =
        astkit::LoadEvalInstructions(eval_instructions_path);
  }
  opts.leakage_threshold = config.leakage_threshold;
  opts.rouge_beta = config.rouge_beta;
  opts.top_name = config.top_name;
  opts.workers = config.workers;
  opts.optimize = config.optimize;
  astkit::LlmClient llm(RequireAdapter(config, astkit::ToolAdapter::Kind::kLlm,
                                       "llm"));
  const astkit::ToolAdapter& synth = RequireAdapter(
      config, astkit::ToolAdapter::Kind::kSynthesis, "synthesis");
  astkit::BuildSummary summary = astkit::RunDatasetBuild(llm, synth, opts);
  std::cout << summary.ToJson() << "\n";
  return 0;
}

int RunDatasetFilterCmd(const CommonArgs& common, const std::string& in_path,
                        const std::string& out_path,
                        const std::string& eval_instructions_path,
                        double threshold) {
  GlobalConfig config = LoadGlobalConfig(common);
  std::vector<astkit::DatasetRecord> records =
      astkit::LoadDatasetRecords(in_path);
  std::vector<std::string> eval_instructions =
      astkit::LoadEvalInstructions(eval_instructions_path);
  astkit::FilterLeakage(records, eval_instructions, threshold,
                        config.rouge_beta);
  astkit::SaveDatasetRecords(out_path.empty() ? in_path : out_path, records);
  int kept = 0;
  for (const astkit::DatasetRecord& record : records) {
    if (record.kept) ++kept;
  }
  nlohmann::ordered_json summary;
  summary["records"] = records.size();
  summary["kept"] = kept;
  summary["threshold"] = threshold;
  std::cout << summary.dump(2) << "\n";
  return 0;
}

int RunEvalReport(const CommonArgs& common, const std::string& outcomes_path,
                  const std::string& problems_path, std::vector<int> k_set,
                  const std::vector<double>& tiers, const std::string& format,
                  bool matrix) {
  GlobalConfig config = LoadGlobalConfig(common);
  if (k_set.empty()) k_set = config.k_set;

  std::map<std::string, std::vector<astkit::AttemptOutcome>> outcomes;
  {
    std::ifstream in(outcomes_path);
    if (!in) {
      throw Error(ErrorCode::kIoError, "cannot open " + outcomes_path);
    }
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.is_object()) {
        throw Error(ErrorCode::kMalformedResponse,
                    "outcome line is not a JSON object: " + line);
      }
      std::string model = j.value("model", std::string("model"));
      astkit::AttemptOutcome outcome = astkit::MakeAttemptOutcome(
          j.at("problem_id").get<std::string>(),
          j.at("attempt_idx").get<int>(), j.at("synth_ok").get<bool>(),
          j.value("constraints_total", 0), j.value("constraints_passed", 0));
      outcomes[model].push_back(outcome);
    }
  }

  std::vector<astkit::ProblemMeta> metas;
  {
    std::ifstream in(problems_path);
    if (!in) {
      throw Error(ErrorCode::kIoError, "cannot open " + problems_path);
    }
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.is_object()) {
        throw Error(ErrorCode::kMalformedResponse,
                    "problem line is not a JSON object: " + line);
      }
      astkit::ProblemMeta meta;
      meta.problem_id = j.at("problem_id").get<std::string>();
      meta.reference_verilog_chars =
          j.at("reference_verilog_chars").get<long long>();
      if (j.contains("tier")) {
        std::string name = j.at("tier").get<std::string>();
        if (name == "T1") {
          meta.tier = astkit::Tier::kT1;
        } else if (name == "T2") {
          meta.tier = astkit::Tier::kT2;
        } else if (name == "T3") {
          meta.tier = astkit::Tier::kT3;
        } else {
          throw Error(ErrorCode::kMalformedResponse,
                      "unknown tier '" + name + "'");
        }
      }
      metas.push_back(std::move(meta));
    }
  }
  bool needs_tiers = false;
  for (const astkit::ProblemMeta& meta : metas) {
    if (!meta.tier.has_value()) needs_tiers = true;
  }
  if (needs_tiers) {
    std::optional<std::pair<double, double>> boundaries;
    if (!tiers.empty()) {
      if (tiers.size() != 2) {
        throw Error(ErrorCode::kInvalidBoundaries,
                    "--tiers expects exactly two values b1,b2");
      }
      boundaries = std::make_pair(tiers[0], tiers[1]);
    }
    astkit::ClassifyTiers(metas, boundaries);
  }

  astkit::MetricReport report =
      astkit::AggregateReport(outcomes, metas, k_set, matrix);
  if (format == "table") {
    std::cout << astkit::ToTable(report);
  } else {
    std::cout << astkit::ToJson(report) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"astkit: HLS-C AST toolkit, dataset pipeline and eval harness"};
  app.failure_message(CLI::FailureMessage::help);
  app.require_subcommand(0, 1);

  CommonArgs common;
  app.add_option("--config", common.config_path,
                 "Toolkit config JSON (defaults apply when omitted)");
  app.add_flag("--version", common.version,
               "Print toolkit and template versions");

  // parse
  auto* parse_cmd = app.add_subcommand("parse", "Parse HLS-C into an AST");
  std::string parse_file, parse_top;
  bool parse_json = false;
  parse_cmd->add_option("file", parse_file, "HLS-C source file")->required();
  parse_cmd->add_option("--top", parse_top, "Select one function by name");
  parse_cmd->add_flag("--dump-json", parse_json, "Dump the AST as JSON");

  // optimize
  auto* opt_cmd =
      app.add_subcommand("optimize", "Parse and optimize an AST");
  std::string opt_file, opt_top;
  bool opt_json = false;
  opt_cmd->add_option("file", opt_file, "HLS-C source file")->required();
  opt_cmd->add_option("--top", opt_top, "Select one function by name");
  opt_cmd->add_flag("--dump-json", opt_json, "Dump the AST as JSON");

  // cfg
  auto* cfg_cmd = app.add_subcommand("cfg", "Extract the control-flow graph");
  std::string cfg_file, cfg_top, cfg_format = "dot";
  cfg_cmd->add_option("file", cfg_file, "HLS-C source file")->required();
  cfg_cmd->add_option("--top", cfg_top, "Select one function by name");
  cfg_cmd->add_option("--format", cfg_format, "Output format")
      ->check(CLI::IsMember({"dot", "json"}));

  // serialize
  auto* ser_cmd = app.add_subcommand(
      "serialize", "Parse, optimize and serialize a function to tag lines");
  std::string ser_file, ser_top = std::string(astkit::kDefaultTopName);
  bool ser_indent = false, ser_with_cfg = false;
  ser_cmd->add_option("file", ser_file, "HLS-C source file")->required();
  ser_cmd->add_option("--top", ser_top, "Function to serialize");
  ser_cmd->add_flag("--indent", ser_indent, "Indent nested lines");
  ser_cmd->add_flag("--with-cfg", ser_with_cfg, "Append the CFG in DOT form");

  // port
  auto* port_cmd = app.add_subcommand(
      "port", "Port one Verilog file to HLS-C through the LLM adapter");
  std::string port_file;
  port_cmd->add_option("file", port_file, "Verilog source file")->required();

  // dataset build | dataset filter
  auto* dataset_cmd =
      app.add_subcommand("dataset", "Dataset pipeline commands");
  dataset_cmd->require_subcommand(1);
  auto* build_cmd = dataset_cmd->add_subcommand(
      "build", "Port a Verilog corpus into a training dataset");
  std::string build_corpus, build_out, build_ledger, build_eval;
  build_cmd->add_option("--corpus", build_corpus, "Directory of .v files")
      ->required();
  build_cmd->add_option("--out", build_out, "Output dataset JSONL")
      ->required();
  build_cmd->add_option("--ledger", build_ledger,
                        "Job ledger path (default: <out>.ledger.jsonl)");
  build_cmd->add_option("--eval-instructions", build_eval,
                        "Eval instruction file for the leakage filter");
  auto* filter_cmd = dataset_cmd->add_subcommand(
      "filter", "Apply the ROUGE-L leakage filter to a dataset");
  std::string filter_in, filter_out, filter_eval;
  double filter_threshold = 0.4;
  filter_cmd->add_option("--in", filter_in, "Input dataset JSONL")
      ->required();
  filter_cmd->add_option("--out", filter_out,
                         "Output dataset JSONL (default: rewrite --in)");
  filter_cmd
      ->add_option("--eval-instructions", filter_eval,
                   "Eval instruction file")
      ->required();
  filter_cmd->add_option("--threshold", filter_threshold,
                         "Keep records strictly below this ROUGE-L score");

  // eval report
  auto* eval_cmd = app.add_subcommand("eval", "Evaluation commands");
  eval_cmd->require_subcommand(1);
  auto* report_cmd =
      eval_cmd->add_subcommand("report", "Aggregate synth@k / pass@k");
  std::string report_outcomes, report_problems, report_format = "json";
  std::vector<int> report_k;
  std::vector<double> report_tiers;
  bool report_matrix = false;
  report_cmd
      ->add_option("--outcomes", report_outcomes, "AttemptOutcome JSONL")
      ->required();
  report_cmd->add_option("--problems", report_problems, "ProblemMeta JSONL")
      ->required();
  report_cmd->add_option("--k", report_k, "k values, e.g. 1,5,10")
      ->delimiter(',');
  report_cmd
      ->add_option("--tiers", report_tiers,
                   "Explicit tier boundaries b1,b2 in characters")
      ->delimiter(',');
  report_cmd->add_option("--format", report_format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));
  report_cmd->add_flag("--matrix", report_matrix,
                       "Include the per-problem benchmark matrix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (common.version && app.get_subcommands().empty()) {
      PrintVersion(LoadGlobalConfig(common));
      return 0;
    }
    if (app.got_subcommand(parse_cmd)) {
      return RunParse(common, parse_file, parse_top, parse_json);
    }
    if (app.got_subcommand(opt_cmd)) {
      return RunOptimize(common, opt_file, opt_top, opt_json);
    }
    if (app.got_subcommand(cfg_cmd)) {
      return RunCfg(common, cfg_file, cfg_top, cfg_format);
    }
    if (app.got_subcommand(ser_cmd)) {
      return RunSerialize(common, ser_file, ser_top, ser_indent,
                          ser_with_cfg);
    }
    if (app.got_subcommand(port_cmd)) {
      return RunPort(common, port_file);
    }
    if (app.got_subcommand(dataset_cmd)) {
      if (dataset_cmd->got_subcommand(build_cmd)) {
        return RunDatasetBuildCmd(common, build_corpus, build_out,
                                  build_ledger, build_eval);
      }
      return RunDatasetFilterCmd(common, filter_in, filter_out, filter_eval,
                                 filter_threshold);
    }
    if (app.got_subcommand(eval_cmd)) {
      return RunEvalReport(common, report_outcomes, report_problems, report_k,
                           report_tiers, report_format, report_matrix);
    }
    std::cout << app.help();
    return 2;
  } catch (const Error& e) {
    std::cerr << "astkit: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "astkit: internal error: " << e.what() << "\n";
    return 1;
  }
}
