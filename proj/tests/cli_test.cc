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
// End-to-end tests of the astkit binary: subcommand wiring, exit codes and
// the exact stdout contracts scripts depend on.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "astkit/dataset.h"
#include "astkit/serialize.h"
#include "gtest/gtest.h"
#include "tests/support/paths.h"

namespace astkit {
namespace {

namespace fs = std::filesystem;

using astkit::testing::CliPath;
using astkit::testing::TemplatesDir;
using astkit::testing::TestDataDir;

constexpr char kListing2Golden[] =
    "FuncName: top_module, Params: ap_uint<11>, ap_uint<8>, bool, bool\n"
    "VarTyp: ap_uint<8>\n"
    "Asgnmnt: v_rdy = v_en\n"
    "IfStmt: Contn: (v_en)\n"
    "Then:\n"
    "Asgnmnt: v_data = rom[v_addr]";

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void WriteFile(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

fs::path MakeTempDir(const std::string& tag) {
  fs::path dir = fs::path(::testing::TempDir()) /
                 ("astkit_cli_" + tag + "_" + std::to_string(getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

// Runs the installed binary through the shell with stdout/stderr captured.
// ASTKIT_TEMPLATES_DIR pins the template lookup to the source tree so the
// test does not depend on the working directory; `extra_env` holds further
// VAR=value assignments.
CliResult RunCli(const std::string& args, const std::string& extra_env = "") {
  static int counter = 0;
  fs::path stamp = fs::path(::testing::TempDir()) /
                   ("astkit_cli_io_" + std::to_string(getpid()) + "_" +
                    std::to_string(counter++));
  fs::path out_path = stamp.string() + ".out";
  fs::path err_path = stamp.string() + ".err";
  std::string command = "ASTKIT_TEMPLATES_DIR=" + TemplatesDir().string() +
                        " " + extra_env + " " + CliPath().string() + " " +
                        args + " >" + out_path.string() + " 2>" +
                        err_path.string();
  int status = std::system(command.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = ReadFile(out_path);
  result.err = ReadFile(err_path);
  return result;
}

std::string Listing2Path() {
  return (TestDataDir() / "corpus" / "listing2_rom.cpp").string();
}

TEST(CliTest, VersionLine) {
  CliResult result = RunCli("--version");
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_EQ(result.out,
            "astkit 0.1.0 (porting template v1, testbench template v1)\n");
}

TEST(CliTest, SerializeEmitsGoldenTagLines) {
  CliResult result = RunCli("serialize " + Listing2Path());
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_EQ(result.out, std::string(kListing2Golden) + "\n");
}

TEST(CliTest, SerializeWithCfgAppendsDot) {
  CliResult result = RunCli("serialize --with-cfg " + Listing2Path());
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(result.out.find(kListing2Golden), std::string::npos);
  EXPECT_NE(result.out.find("digraph cfg {"), std::string::npos);
}

TEST(CliTest, ParsePrettyPrints) {
  CliResult result = RunCli("parse " + Listing2Path());
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(result.out.find("top_module"), std::string::npos);
  EXPECT_NE(result.out.find("v_rdy = v_en;"), std::string::npos);
}

TEST(CliTest, ParseDumpJson) {
  CliResult result = RunCli("parse --dump-json " + Listing2Path());
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(result.out.find("\"kind\""), std::string::npos);
  EXPECT_NE(result.out.find("TranslationUnit"), std::string::npos);
}

TEST(CliTest, OptimizeDumpJson) {
  CliResult result = RunCli("optimize --dump-json " + Listing2Path());
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(result.out.find("FunctionDef"), std::string::npos);
}

TEST(CliTest, CfgDotAndJsonFormats) {
  CliResult dot = RunCli("cfg " + Listing2Path());
  EXPECT_EQ(dot.exit_code, 0);
  EXPECT_NE(dot.out.find("digraph cfg {"), std::string::npos);

  CliResult json = RunCli("cfg --format json " + Listing2Path());
  EXPECT_EQ(json.exit_code, 0);
  EXPECT_NE(json.out.find("\"edges\""), std::string::npos);
}

TEST(CliTest, MissingFileIsDomainError) {
  CliResult result = RunCli("parse /nonexistent/input.cpp");
  EXPECT_EQ(result.exit_code, 1);
  EXPECT_EQ(result.err.rfind("astkit: ", 0), 0u);
}

TEST(CliTest, UnknownSubcommandIsUsageError) {
  CliResult result = RunCli("frobnicate");
  EXPECT_EQ(result.exit_code, 2);
}

TEST(CliTest, BareInvocationPrintsHelpWithUsageExit) {
  CliResult result = RunCli("");
  EXPECT_EQ(result.exit_code, 2);
  EXPECT_NE(result.out.find("serialize"), std::string::npos);
}

TEST(CliTest, HelpFlagExitsZero) {
  CliResult result = RunCli("--help");
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(result.out.find("parse"), std::string::npos);
  EXPECT_NE(result.out.find("dataset"), std::string::npos);
}

TEST(CliTest, PortEmitsJsonWithSourceIdInstructionCode) {
  CliResult result = RunCli(
      "port " + (TestDataDir() / "verilog" / "adder8.v").string());
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(result.out.find("\"source_id\": \"adder8\""), std::string::npos);
  EXPECT_NE(result.out.find("\"instruction\""), std::string::npos);
  EXPECT_NE(result.out.find("\"code\""), std::string::npos);
}

TEST(CliTest, EvalReportJsonHeadlines) {
  CliResult result = RunCli(
      "eval report --outcomes " +
      (TestDataDir() / "eval" / "outcomes.jsonl").string() + " --problems " +
      (TestDataDir() / "eval" / "problems.jsonl").string() + " --k 1,3");
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(result.out.find("\"demo\""), std::string::npos);
  EXPECT_NE(result.out.find("50.00%"), std::string::npos);
  EXPECT_NE(result.out.find("100.00%"), std::string::npos);
}

TEST(CliTest, EvalReportTableWithMatrix) {
  CliResult result = RunCli(
      "eval report --format table --matrix --outcomes " +
      (TestDataDir() / "eval" / "outcomes.jsonl").string() + " --problems " +
      (TestDataDir() / "eval" / "problems.jsonl").string() + " --k 1,3");
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(result.out.find("demo"), std::string::npos);
  EXPECT_NE(result.out.find("P2"), std::string::npos);
  EXPECT_NE(result.out.find("@1:S+P-"), std::string::npos);
  EXPECT_NE(result.out.find("@3:S+P+"), std::string::npos);
}

TEST(CliTest, EvalReportRejectsBadTierBoundaries) {
  CliResult result = RunCli(
      "eval report --tiers 500,100 --outcomes " +
      (TestDataDir() / "eval" / "outcomes.jsonl").string() + " --problems " +
      (TestDataDir() / "eval" / "problems.jsonl").string() + " --k 1");
  EXPECT_EQ(result.exit_code, 1);
  EXPECT_EQ(result.err.rfind("astkit: ", 0), 0u);
}

TEST(CliTest, DatasetBuildIsDeterministic) {
  fs::path corpus = MakeTempDir("corpus");
  WriteFile(corpus / "tiny_a.v",
            "module tiny_a(input clk, output reg q);\nendmodule\n");
  WriteFile(corpus / "tiny_b.v",
            "module tiny_b(input clk, output reg [3:0] q);\nendmodule\n");

  fs::path dir_a = MakeTempDir("build_a");
  fs::path dir_b = MakeTempDir("build_b");
  std::string common =
      " --eval-instructions " +
      (TestDataDir() / "eval" / "eval_instructions.txt").string();
  CliResult first = RunCli(
      "dataset build --corpus " + corpus.string() + " --out " +
          (dir_a / "data.jsonl").string() + common,
      "ASTKIT_WORKDIR_ROOT=" + (dir_a / "work").string());
  CliResult second = RunCli(
      "dataset build --corpus " + corpus.string() + " --out " +
          (dir_b / "data.jsonl").string() + common,
      "ASTKIT_WORKDIR_ROOT=" + (dir_b / "work").string());
  EXPECT_EQ(first.exit_code, 0);
  EXPECT_EQ(second.exit_code, 0);
  EXPECT_NE(first.out.find("\"total_jobs\": 2"), std::string::npos);
  EXPECT_NE(first.out.find("\"accepted\": 2"), std::string::npos);
  EXPECT_EQ(ReadFile(dir_a / "data.jsonl"), ReadFile(dir_b / "data.jsonl"));
  EXPECT_FALSE(ReadFile(dir_a / "data.jsonl").empty());
}

TEST(CliTest, DatasetFilterRewritesKeptFlags) {
  fs::path dir = MakeTempDir("filter");
  SerializedAst ast;
  ast.text = "FuncName: f, Params:";
  ast.line_count = 1;
  std::vector<DatasetRecord> records;
  DatasetRecord leak;
  leak.record = AssembleTrainingRecord(
      "Implement a 4-bit Johnson counter with an active-high synchronous "
      "reset.",
      ast, "void f() {}", "leak", "leak");
  leak.synthesizable = true;
  leak.kept = true;
  records.push_back(leak);
  DatasetRecord clean;
  clean.record = AssembleTrainingRecord(
      "Compute the exclusive-or reduction of a wide input bus.", ast,
      "void f() {}", "clean", "clean");
  clean.synthesizable = true;
  clean.kept = true;
  records.push_back(clean);
  SaveDatasetRecords(dir / "in.jsonl", records);

  CliResult result = RunCli(
      "dataset filter --in " + (dir / "in.jsonl").string() + " --out " +
      (dir / "out.jsonl").string() + " --eval-instructions " +
      (TestDataDir() / "eval" / "eval_instructions.txt").string() +
      " --threshold 0.4");
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(result.out.find("\"kept\": 1"), std::string::npos);

  std::vector<DatasetRecord> filtered = LoadDatasetRecords(dir / "out.jsonl");
  ASSERT_EQ(filtered.size(), 2u);
  EXPECT_FALSE(filtered[0].kept);  // verbatim eval instruction leaks
  EXPECT_EQ(filtered[0].rouge_max, 1.0);
  EXPECT_TRUE(filtered[1].kept);
}

TEST(CliTest, ConfigFlagIsRespected) {
  fs::path dir = MakeTempDir("config");
  WriteFile(dir / "bad.json", "{\"workers\": 0}\n");
  CliResult bad = RunCli("--config " + (dir / "bad.json").string() +
                         " parse " + Listing2Path());
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_EQ(bad.err.rfind("astkit: ", 0), 0u);

  CliResult good = RunCli(
      "--config " +
      (TestDataDir() / "config" / "mock_pipeline.json").string() +
      " serialize " + Listing2Path());
  EXPECT_EQ(good.exit_code, 0);
  EXPECT_EQ(good.out, std::string(kListing2Golden) + "\n");
}

}  // namespace
}  // namespace astkit
