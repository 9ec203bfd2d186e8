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

#ifndef ASTKIT_TOOLBRIDGE_H_
#define ASTKIT_TOOLBRIDGE_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace astkit {

struct ChatMessage {
  std::string role;
  std::string content;

  friend bool operator==(const ChatMessage&, const ChatMessage&) = default;
};

// Declarative description of one external tool. Real invocations substitute
// {input}, {workdir} and {top} into command_template and run it through the
// shell inside a fresh working directory; mock mode never spawns anything.
struct ToolAdapter {
  enum class Kind { kLlm, kSynthesis, kSimulation };

  std::string name;
  Kind kind = Kind::kSynthesis;
  std::string command_template = "{input}";
  double timeout_seconds = 60.0;
  std::map<std::string, std::string> env;
  bool mock_mode = true;

  // Synthesis: success requires exit 0 AND none of these substrings in the
  // log. HLS tools sometimes exit 0 with fatal log errors.
  std::vector<std::string> failure_patterns = {"ERROR: [HLS"};

  // LLM endpoint settings.
  std::string endpoint;                          // http://host:port/v1/chat/completions
  std::string model = "gpt-4o";
  std::string credential_env = "ASTKIT_API_KEY";  // env var holding the key
  int max_retries = 3;
  int backoff_initial_ms = 500;  // doubled per retry
  int parallelism = 1;
  double rate_limit_per_sec = 0.0;  // 0 = unlimited

  // Throws kInvalidConfig unless command_template contains {input} and
  // timeout is positive.
  void Validate() const;
};

struct SynthResult {
  bool success = false;
  std::string log_excerpt;
  std::optional<std::filesystem::path> rtl_path;  // present iff success
  double wall_time_seconds = 0.0;
};

struct SimResult {
  std::string log_text;
  bool exit_ok = false;
};

// Deterministic mock behavior is steered by directives embedded in the input
// text, so fixtures stay self-describing:
//   "mock-synth: fail"            synthesis log gets an ERROR: [HLS line
//   "mock-llm: malformed"         chat response carries no (1)/(2) sections
//   "mock-sim: CONSTRAINT n P|F"  each such line is echoed to the sim log
inline constexpr std::string_view kMockSynthFailDirective = "mock-synth: fail";
inline constexpr std::string_view kMockLlmMalformedDirective =
    "mock-llm: malformed";
inline constexpr std::string_view kMockSimDirective = "mock-sim:";

// Writes `hls_code` into a fresh workdir under `workroot`, runs the adapter
// command (or the mock), and classifies success from exit status plus the
// failure-pattern scan of the log. `invocation_id` names the workdir; pass
// the job/source id for reproducible layouts, or leave empty to derive one
// from the input hash. Throws kTimeout, kSpawnFailure, kWorkdirError.
SynthResult RunSynthesis(std::string_view hls_code, std::string_view top,
                         const ToolAdapter& adapter,
                         const std::filesystem::path& workroot,
                         std::string_view invocation_id = {});

// Runs the testbench against rtl_path and returns the raw log; constraint
// interpretation belongs to evalkit. A missing rtl_path is kSpawnFailure.
SimResult RunConstrainedSim(const std::filesystem::path& rtl_path,
                            std::string_view testbench,
                            const ToolAdapter& adapter,
                            const std::filesystem::path& workroot,
                            std::string_view invocation_id = {});

// Key for mock fixtures: FNV-1a over the serialized message list.
std::uint64_t FixtureKey(const std::vector<ChatMessage>& messages);

// Chat-completion client. Real mode POSTs {model, messages:[{role,content}]}
// to the endpoint with a bearer token from credential_env and returns the
// first choice's content; 429 and 5xx responses are retried with exponential
// backoff up to max_retries. Mock mode returns the registered fixture for
// FixtureKey(messages), or a deterministic ported-code response derived from
// the last user message when no fixture matches.
class LlmClient {
 public:
  explicit LlmClient(ToolAdapter adapter);

  std::string Chat(const std::vector<ChatMessage>& messages);

  void RegisterMockFixture(const std::vector<ChatMessage>& messages,
                           std::string response);
  void RegisterMockFixture(std::uint64_t key, std::string response);

  // Requests seen so far, for contract tests against the mock.
  const std::vector<std::vector<ChatMessage>>& requests() const {
    return requests_;
  }

  const ToolAdapter& adapter() const { return adapter_; }

 private:
  std::string MockRespond(const std::vector<ChatMessage>& messages);

  ToolAdapter adapter_;
  std::map<std::uint64_t, std::string> fixtures_;
  std::vector<std::vector<ChatMessage>> requests_;
  std::mutex mu_;
};

// Renders the versioned testbench-augmentation template with the reference
// code, existing testbench and instruction, producing a prompt that demands
// CONSTRAINT <id> PASS|FAIL output lines. Throws kEmptyInput /
// kTemplateNotFound.
std::vector<ChatMessage> BuildTestbenchAugmentationPrompt(
    std::string_view reference_code, std::string_view testbench,
    std::string_view instruction, const std::filesystem::path& template_path);

}  // namespace astkit

#endif  // ASTKIT_TOOLBRIDGE_H_
