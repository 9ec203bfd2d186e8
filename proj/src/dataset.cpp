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

#include "astkit/dataset.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "astkit/error.h"
#include "astkit/parser.h"
#include "astkit/rouge.h"
#include "astkit/source.h"
#include "nlohmann/json.hpp"
#include "src/internal/template_io.h"

namespace astkit {
namespace {

namespace fs = std::filesystem;

std::string Lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

std::string_view TrimView(std::string_view text) {
  std::size_t begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  std::size_t end = text.find_last_not_of(" \t\r\n");
  return text.substr(begin, end - begin + 1);
}

std::vector<std::string> SplitLines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = eol == std::string_view::npos
                                ? text.substr(pos)
                                : text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

bool IsFenceLine(std::string_view line) {
  return TrimView(line).substr(0, 3) == "```";
}

// Numbered-heading detection tolerating "(1)", "1)", "1." and markdown "#"
// prefixes, with a keyword so stray numbers in prose do not split sections.
bool IsSectionHeading(const std::string& line, char digit,
                      std::initializer_list<std::string_view> keywords) {
  std::string lowered = Lower(line);
  std::string_view trimmed = TrimView(lowered);
  while (!trimmed.empty() && (trimmed.front() == '#' || trimmed.front() == '*')) {
    trimmed.remove_prefix(1);
    if (!trimmed.empty() && trimmed.front() == ' ') trimmed.remove_prefix(1);
  }
  bool numbered = false;
  if (trimmed.size() >= 3 && trimmed[0] == '(' && trimmed[1] == digit &&
      trimmed[2] == ')') {
    numbered = true;
  } else if (trimmed.size() >= 2 && trimmed[0] == digit &&
             (trimmed[1] == ')' || trimmed[1] == '.')) {
    numbered = true;
  }
  if (!numbered) return false;
  for (std::string_view keyword : keywords) {
    if (lowered.find(keyword) != std::string::npos) return true;
  }
  return false;
}

// Joins lines[begin, end) and trims outer whitespace.
std::string JoinBody(const std::vector<std::string>& lines, std::size_t begin,
                     std::size_t end) {
  std::string body;
  for (std::size_t i = begin; i < end; ++i) {
    body += lines[i];
    body += '\n';
  }
  return std::string(TrimView(body));
}

// Contents of the first fenced block in lines[begin, end), if any. The fence
// info string ("cpp", "c++") is discarded.
std::optional<std::string> FencedBlock(const std::vector<std::string>& lines,
                                       std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i) {
    if (!IsFenceLine(lines[i])) continue;
    std::string body;
    for (std::size_t j = i + 1; j < end; ++j) {
      if (IsFenceLine(lines[j])) return body;
      body += lines[j];
      body += '\n';
    }
    return body;  // unterminated fence: take everything after it
  }
  return std::nullopt;
}

nlohmann::ordered_json DatasetRecordToJsonObject(const DatasetRecord& record) {
  nlohmann::ordered_json j;
  j["id"] = record.record.id;
  j["source_id"] = record.record.source_id;
  j["instruction"] = record.record.instruction;
  j["ast"] = record.record.ast.text;
  j["code"] = record.record.code;
  j["synthesizable"] = record.synthesizable;
  j["rouge_max"] = record.rouge_max;
  j["kept"] = record.kept;
  return j;
}

DatasetRecord DatasetRecordFromJsonObject(const nlohmann::json& j) {
  DatasetRecord record;
  record.record.id = j.at("id").get<std::string>();
  record.record.source_id = j.at("source_id").get<std::string>();
  record.record.instruction = j.at("instruction").get<std::string>();
  record.record.ast.text = j.at("ast").get<std::string>();
  record.record.ast.line_count =
      record.record.ast.text.empty()
          ? 0
          : 1 + static_cast<int>(std::count(record.record.ast.text.begin(),
                                            record.record.ast.text.end(),
                                            '\n'));
  record.record.code = j.at("code").get<std::string>();
  record.synthesizable = j.at("synthesizable").get<bool>();
  record.rouge_max = j.at("rouge_max").get<double>();
  record.kept = j.at("kept").get<bool>();
  return record;
}

}  // namespace

std::vector<ChatMessage> BuildPortingPrompt(
    std::string_view verilog_text,
    const std::filesystem::path& template_path) {
  if (TrimView(verilog_text).empty()) {
    throw Error(ErrorCode::kEmptyInput, "verilog_text is empty");
  }
  std::string system_text = internal::ReadTemplateFile(template_path);
  return {ChatMessage{"system", std::move(system_text)},
          ChatMessage{"user", std::string(verilog_text)}};
}

PortingResponse ParsePortingResponse(std::string_view response_text) {
  std::vector<std::string> lines = SplitLines(response_text);

  std::size_t instruction_heading = lines.size();
  std::size_t code_heading = lines.size();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (code_heading == lines.size() &&
        IsSectionHeading(lines[i], '1', {"code", "hls"})) {
      code_heading = i;
    } else if (IsSectionHeading(lines[i], '2',
                                {"prompt", "instruction", "description"})) {
      instruction_heading = i;
      break;
    }
  }

  std::size_t code_end =
      instruction_heading < lines.size() ? instruction_heading : lines.size();
  std::size_t code_begin = code_heading < code_end ? code_heading + 1 : 0;

  std::string hls_code;
  std::optional<std::string> fenced = FencedBlock(lines, code_begin, code_end);
  if (fenced.has_value()) {
    hls_code = *fenced;
  } else if (code_heading < code_end) {
    hls_code = JoinBody(lines, code_begin, code_end);
    if (!hls_code.empty()) hls_code += '\n';
  }
  if (TrimView(hls_code).empty()) {
    throw Error(ErrorCode::kMissingCodeSection,
                "no '(1) Equivalent HLS Code' section or fenced code block");
  }

  if (instruction_heading >= lines.size()) {
    throw Error(ErrorCode::kMissingInstructionSection,
                "no '(2) Corresponding Prompt' section");
  }
  std::string instruction;
  std::optional<std::string> fenced_instruction =
      FencedBlock(lines, instruction_heading + 1, lines.size());
  if (fenced_instruction.has_value()) {
    instruction = std::string(TrimView(*fenced_instruction));
  } else {
    instruction = JoinBody(lines, instruction_heading + 1, lines.size());
  }
  if (instruction.empty()) {
    throw Error(ErrorCode::kMissingInstructionSection,
                "'(2) Corresponding Prompt' section is empty");
  }

  PortingResponse response;
  response.hls_code = std::move(hls_code);
  response.instruction = std::move(instruction);
  return response;
}

std::string ToJsonLine(const DatasetRecord& record) {
  return DatasetRecordToJsonObject(record).dump();
}

DatasetRecord DatasetRecordFromJson(std::string_view line) {
  nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw Error(ErrorCode::kIoError,
                "dataset line is not a JSON object: " + std::string(line));
  }
  try {
    return DatasetRecordFromJsonObject(j);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kIoError,
                std::string("dataset line missing field: ") + e.what());
  }
}

std::vector<DatasetRecord> LoadDatasetRecords(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  }
  std::vector<DatasetRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (TrimView(line).empty()) continue;
    records.push_back(DatasetRecordFromJson(line));
  }
  return records;
}

void SaveDatasetRecords(const std::filesystem::path& path,
                        const std::vector<DatasetRecord>& records) {
  std::set<std::string> seen;
  for (const DatasetRecord& record : records) {
    if (!seen.insert(record.record.id).second) {
      throw Error(ErrorCode::kDuplicateId,
                  "dataset contains two records with id '" + record.record.id +
                      "'");
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  }
  for (const DatasetRecord& record : records) {
    out << ToJsonLine(record) << '\n';
  }
  if (!out) {
    throw Error(ErrorCode::kIoError, "write failed for " + path.string());
  }
}

std::vector<std::string> LoadEvalInstructions(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  }
  std::vector<std::string> instructions;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view trimmed = TrimView(line);
    if (trimmed.empty()) continue;
    if (trimmed.front() == '{' || trimmed.front() == '"') {
      nlohmann::json j = nlohmann::json::parse(trimmed, nullptr, false);
      if (j.is_string()) {
        instructions.push_back(j.get<std::string>());
        continue;
      }
      if (j.is_object() && j.contains("instruction") &&
          j["instruction"].is_string()) {
        instructions.push_back(j["instruction"].get<std::string>());
        continue;
      }
      throw Error(ErrorCode::kIoError,
                  "eval instruction line is neither a JSON string nor an "
                  "object with an 'instruction' field: " +
                      std::string(trimmed));
    }
    instructions.emplace_back(trimmed);
  }
  return instructions;
}

void FilterLeakage(std::vector<DatasetRecord>& records,
                   const std::vector<std::string>& eval_instructions,
                   double threshold, double beta) {
  if (eval_instructions.empty()) {
    throw Error(ErrorCode::kEmptyInput, "eval_instructions is empty");
  }
  TokenLists candidates;
  candidates.reserve(records.size());
  for (const DatasetRecord& record : records) {
    candidates.push_back(RougeTokenize(record.record.instruction));
  }
  TokenLists references;
  references.reserve(eval_instructions.size());
  for (const std::string& instruction : eval_instructions) {
    references.push_back(RougeTokenize(instruction));
  }
  std::vector<double> scores = MaxRougeScores(candidates, references, beta);
  for (std::size_t i = 0; i < records.size(); ++i) {
    records[i].rouge_max = scores[i];
    records[i].kept = records[i].synthesizable && scores[i] < threshold;
  }
}

std::string_view JobStatusName(JobStatus status) {
  switch (status) {
    case JobStatus::kPending:
      return "pending";
    case JobStatus::kPorted:
      return "ported";
    case JobStatus::kParseFailed:
      return "parse_failed";
    case JobStatus::kSynthFailed:
      return "synth_failed";
    case JobStatus::kAccepted:
      return "accepted";
  }
  return "pending";
}

std::optional<JobStatus> JobStatusFromName(std::string_view name) {
  if (name == "pending") return JobStatus::kPending;
  if (name == "ported") return JobStatus::kPorted;
  if (name == "parse_failed") return JobStatus::kParseFailed;
  if (name == "synth_failed") return JobStatus::kSynthFailed;
  if (name == "accepted") return JobStatus::kAccepted;
  return std::nullopt;
}

JobLedger JobLedger::Load(const std::filesystem::path& path) {
  JobLedger ledger;
  ledger.path_ = path;
  std::ifstream in(path, std::ios::binary);
  if (!in) return ledger;  // a missing ledger is an empty ledger
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view trimmed = TrimView(line);
    if (trimmed.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(trimmed, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("source_id") ||
        !j.contains("status")) {
      throw Error(ErrorCode::kIoError,
                  "malformed ledger line " + std::to_string(line_no) + " in " +
                      path.string());
    }
    JobLedgerEntry entry;
    entry.source_id = j["source_id"].get<std::string>();
    auto status = JobStatusFromName(j["status"].get<std::string>());
    if (!status.has_value()) {
      throw Error(ErrorCode::kIoError,
                  "unknown job status on ledger line " +
                      std::to_string(line_no) + " in " + path.string());
    }
    entry.status = *status;
    if (j.contains("error")) entry.error = j["error"].get<std::string>();
    if (j.contains("record")) {
      entry.record = DatasetRecordFromJsonObject(j["record"]);
    }
    ledger.index_[entry.source_id] = ledger.entries_.size();
    ledger.entries_.push_back(std::move(entry));
  }
  return ledger;
}

void JobLedger::Append(const JobLedgerEntry& entry) {
  nlohmann::ordered_json j;
  j["source_id"] = entry.source_id;
  j["status"] = std::string(JobStatusName(entry.status));
  if (!entry.error.empty()) j["error"] = entry.error;
  if (entry.record.has_value()) {
    j["record"] = DatasetRecordToJsonObject(*entry.record);
  }
  std::ofstream out(path_, std::ios::binary | std::ios::app);
  if (!out) {
    throw Error(ErrorCode::kIoError,
                "cannot append to ledger " + path_.string());
  }
  out << j.dump() << '\n';
  out.flush();
  if (!out) {
    throw Error(ErrorCode::kIoError, "ledger write failed: " + path_.string());
  }
  index_[entry.source_id] = entries_.size();
  entries_.push_back(entry);
}

const JobLedgerEntry* JobLedger::Find(std::string_view source_id) const {
  auto it = index_.find(source_id);
  if (it == index_.end()) return nullptr;
  return &entries_[it->second];
}

bool JobLedger::IsTerminal(JobStatus status) {
  return status == JobStatus::kParseFailed ||
         status == JobStatus::kSynthFailed || status == JobStatus::kAccepted;
}

std::string BuildSummary::ToJson() const {
  nlohmann::ordered_json j;
  j["total_jobs"] = total_jobs;
  j["skipped_resumed"] = skipped_resumed;
  j["parse_failed"] = parse_failed;
  j["synth_failed"] = synth_failed;
  j["accepted"] = accepted;
  j["errored"] = errored;
  j["records_written"] = records_written;
  j["kept"] = kept;
  return j.dump(2);
}

namespace {

struct PortingJob {
  std::string source_id;
  std::string verilog_text;
};

// Runs one job end to end; every failure mode becomes a ledger entry rather
// than an exception, so a bad job never takes down the batch.
JobLedgerEntry ProcessJob(const PortingJob& job, LlmClient& llm,
                          const ToolAdapter& synth,
                          const PipelineOptions& opts) {
  JobLedgerEntry entry;
  entry.source_id = job.source_id;

  std::string response_text;
  try {
    std::vector<ChatMessage> prompt =
        BuildPortingPrompt(job.verilog_text, opts.porting_template);
    response_text = llm.Chat(prompt);
  } catch (const Error& e) {
    entry.status = JobStatus::kPending;  // transport problems are retryable
    entry.error = e.what();
    return entry;
  }

  PortingResponse ported;
  SerializedAst serialized;
  try {
    ported = ParsePortingResponse(response_text);
    SourceFile src =
        SourceFile::FromText(job.source_id + ".cpp", ported.hls_code);
    AstNode tree = Parse(src);
    const AstNode& function = FindFunction(tree, opts.top_name);
    AstNode optimized = Optimize(function, opts.optimize);
    serialized = Serialize(optimized);
  } catch (const Error& e) {
    entry.status = JobStatus::kParseFailed;
    entry.error = e.what();
    return entry;
  }

  SynthResult synth_result;
  try {
    synth_result = RunSynthesis(ported.hls_code, opts.top_name, synth,
                                opts.workdir_root, job.source_id);
  } catch (const Error& e) {
    entry.status = JobStatus::kPorted;  // tool-invocation errors are retryable
    entry.error = e.what();
    return entry;
  }

  DatasetRecord record;
  try {
    record.record =
        AssembleTrainingRecord(ported.instruction, serialized, ported.hls_code,
                               job.source_id, job.source_id);
  } catch (const Error& e) {
    entry.status = JobStatus::kParseFailed;
    entry.error = e.what();
    return entry;
  }
  record.synthesizable = synth_result.success;
  record.rouge_max = 0.0;  // leakage scoring happens over the whole batch
  record.kept = synth_result.success;
  entry.record = std::move(record);
  entry.status = synth_result.success ? JobStatus::kAccepted
                                      : JobStatus::kSynthFailed;
  if (!synth_result.success) entry.error = synth_result.log_excerpt;
  return entry;
}

}  // namespace

BuildSummary RunDatasetBuild(LlmClient& llm, const ToolAdapter& synth,
                             const PipelineOptions& opts) {
  if (opts.out_path.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "out_path is empty");
  }
  fs::path ledger_path = opts.ledger_path.empty()
                             ? fs::path(opts.out_path.string() +
                                        ".ledger.jsonl")
                             : opts.ledger_path;
  if (ledger_path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(ledger_path.parent_path(), ec);
  }

  std::vector<PortingJob> jobs;
  {
    std::error_code ec;
    fs::directory_iterator it(opts.corpus_dir, ec);
    if (ec) {
      throw Error(ErrorCode::kIoError, "cannot read corpus dir " +
                                           opts.corpus_dir.string() + ": " +
                                           ec.message());
    }
    std::vector<fs::path> files;
    for (const fs::directory_entry& dirent : it) {
      if (dirent.is_regular_file() && dirent.path().extension() == ".v") {
        files.push_back(dirent.path());
      }
    }
    std::sort(files.begin(), files.end());
    for (const fs::path& file : files) {
      SourceFile verilog = SourceFile::Load(file);
      jobs.push_back(PortingJob{file.stem().string(), verilog.text});
    }
  }

  JobLedger ledger = JobLedger::Load(ledger_path);
  BuildSummary summary;
  summary.total_jobs = static_cast<int>(jobs.size());

  // source_id -> record, filled from resumed entries and fresh runs alike;
  // output order follows corpus order below.
  std::map<std::string, DatasetRecord> records_by_id;

  std::vector<const PortingJob*> pending;
  for (const PortingJob& job : jobs) {
    const JobLedgerEntry* prior = ledger.Find(job.source_id);
    if (prior != nullptr && JobLedger::IsTerminal(prior->status)) {
      ++summary.skipped_resumed;
      if (prior->record.has_value()) {
        records_by_id[job.source_id] = *prior->record;
      }
      continue;
    }
    pending.push_back(&job);
  }

  // OpenMP pool: jobs run concurrently, but entries commit in corpus order so
  // the ledger and dataset bytes never depend on scheduling.
  int workers = std::max(1, opts.workers);
  std::vector<JobLedgerEntry> results(pending.size());
#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(pending.size());
       ++i) {
    try {
      results[static_cast<std::size_t>(i)] =
          ProcessJob(*pending[static_cast<std::size_t>(i)], llm, synth, opts);
    } catch (const std::exception& e) {
      JobLedgerEntry entry;
      entry.source_id = pending[static_cast<std::size_t>(i)]->source_id;
      entry.status = JobStatus::kPending;
      entry.error = e.what();
      results[static_cast<std::size_t>(i)] = std::move(entry);
    }
  }
  for (JobLedgerEntry& entry : results) {
    switch (entry.status) {
      case JobStatus::kPending:
      case JobStatus::kPorted:
        ++summary.errored;
        break;
      case JobStatus::kParseFailed:
        ++summary.parse_failed;
        break;
      case JobStatus::kSynthFailed:
        ++summary.synth_failed;
        break;
      case JobStatus::kAccepted:
        ++summary.accepted;
        break;
    }
    if (entry.record.has_value()) {
      records_by_id[entry.source_id] = *entry.record;
    }
    ledger.Append(entry);
  }

  std::vector<DatasetRecord> records;
  for (const PortingJob& job : jobs) {
    auto it = records_by_id.find(job.source_id);
    if (it != records_by_id.end()) records.push_back(it->second);
  }
  if (!opts.eval_instructions.empty()) {
    FilterLeakage(records, opts.eval_instructions, opts.leakage_threshold,
                  opts.rouge_beta);
  }
  SaveDatasetRecords(opts.out_path, records);
  summary.records_written = static_cast<int>(records.size());
  for (const DatasetRecord& record : records) {
    if (record.kept) ++summary.kept;
  }
  return summary;
}

}  // namespace astkit
