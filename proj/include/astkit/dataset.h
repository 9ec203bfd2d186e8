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

#ifndef ASTKIT_DATASET_H_
#define ASTKIT_DATASET_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "astkit/optimize.h"
#include "astkit/serialize.h"
#include "astkit/toolbridge.h"

namespace astkit {

// Builds the two-message porting request: the system message is the versioned
// template file verbatim, the user message is the Verilog text. Throws
// kEmptyInput / kTemplateNotFound.
std::vector<ChatMessage> BuildPortingPrompt(
    std::string_view verilog_text, const std::filesystem::path& template_path);

struct PortingResponse {
  std::string hls_code;
  std::string instruction;
};

// Extracts the "(1) Equivalent HLS Code" and "(2) Corresponding Prompt"
// sections from a porting response. Tolerates fenced code blocks and minor
// heading variations. Throws kMissingCodeSection / kMissingInstructionSection.
// Whether the code actually contains a top_module function is checked later,
// at the parse/validate stage.
PortingResponse ParsePortingResponse(std::string_view response_text);

// One dataset row. kept implies synthesizable and rouge_max below the
// leakage threshold.
struct DatasetRecord {
  TrainingRecord record;
  bool synthesizable = false;
  double rouge_max = 0.0;
  bool kept = false;
};

std::string ToJsonLine(const DatasetRecord& record);
DatasetRecord DatasetRecordFromJson(std::string_view line);

std::vector<DatasetRecord> LoadDatasetRecords(
    const std::filesystem::path& path);
// Writes one record per line; throws kDuplicateId when two records share an
// id.
void SaveDatasetRecords(const std::filesystem::path& path,
                        const std::vector<DatasetRecord>& records);

// Eval instruction file: JSON-lines of strings or of objects with an
// "instruction" field; plain text files are read one instruction per line.
std::vector<std::string> LoadEvalInstructions(
    const std::filesystem::path& path);

// Sets rouge_max = max over eval instructions of
// RougeL(record.instruction, eval_instruction) and kept = synthesizable &&
// rouge_max < threshold (strictly below keeps). eval_instructions must be
// non-empty. Runs the score matrix through the OpenMP kernel.
void FilterLeakage(std::vector<DatasetRecord>& records,
                   const std::vector<std::string>& eval_instructions,
                   double threshold = 0.4, double beta = 1.0);

// Porting-job states. Transitions move only forward:
// pending -> ported -> {synth_failed | accepted}, or pending -> parse_failed.
enum class JobStatus { kPending, kPorted, kParseFailed, kSynthFailed,
                       kAccepted };

std::string_view JobStatusName(JobStatus status);
std::optional<JobStatus> JobStatusFromName(std::string_view name);

struct JobLedgerEntry {
  std::string source_id;
  JobStatus status = JobStatus::kPending;
  std::string error;
  std::optional<DatasetRecord> record;  // present for synth_failed/accepted
};

// Append-only JSON-lines status file stored next to the dataset output. A
// 19K-file porting run through an external LLM has to survive interruption;
// terminal entries (parse_failed, synth_failed, accepted) are skipped on
// resume, so rerunning a completed build performs zero external calls.
class JobLedger {
 public:
  static JobLedger Load(const std::filesystem::path& path);

  void Append(const JobLedgerEntry& entry);  // persists immediately
  const JobLedgerEntry* Find(std::string_view source_id) const;
  static bool IsTerminal(JobStatus status);

  const std::vector<JobLedgerEntry>& entries() const { return entries_; }

 private:
  std::filesystem::path path_;
  std::vector<JobLedgerEntry> entries_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

struct PipelineOptions {
  std::filesystem::path corpus_dir;
  std::filesystem::path out_path;
  std::filesystem::path ledger_path;  // default: out_path + ".ledger.jsonl"
  std::filesystem::path workdir_root = ".astkit-work";
  std::filesystem::path porting_template;
  std::vector<std::string> eval_instructions;  // empty: filter skipped
  double leakage_threshold = 0.4;
  double rouge_beta = 1.0;
  std::string top_name = "top_module";
  int workers = 1;
  OptimizeConfig optimize;
};

struct BuildSummary {
  int total_jobs = 0;
  int skipped_resumed = 0;
  int parse_failed = 0;
  int synth_failed = 0;
  int accepted = 0;
  int errored = 0;  // jobs left pending with a recorded error
  int records_written = 0;
  int kept = 0;

  std::string ToJson() const;
};

// Full dataset build over every .v file in corpus_dir: port through `llm`,
// parse/optimize/serialize the HLS-C, synthesize through `synth`, assemble
// the record and apply the leakage filter. Jobs run on an OpenMP pool of
// opts.workers threads; ledger entries commit in corpus order regardless of
// scheduling, so outputs are byte-identical across runs. A single job
// failure never aborts the batch: it is recorded in the ledger and the run
// continues.
BuildSummary RunDatasetBuild(LlmClient& llm, const ToolAdapter& synth,
                             const PipelineOptions& opts);

}  // namespace astkit

#endif  // ASTKIT_DATASET_H_
