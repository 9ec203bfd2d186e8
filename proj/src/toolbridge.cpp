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

#include "astkit/toolbridge.h"

#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <thread>

#include "astkit/error.h"
#include "httplib.h"
#include "nlohmann/json.hpp"
#include "src/internal/template_io.h"

namespace astkit {
namespace {

namespace fs = std::filesystem;

constexpr std::uint64_t kFnvOffset = 14695981039346656037ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

std::uint64_t FnvMix(std::uint64_t hash, std::string_view bytes) {
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= kFnvPrime;
  }
  return hash;
}

std::uint64_t FnvMixByte(std::uint64_t hash, unsigned char byte) {
  hash ^= byte;
  hash *= kFnvPrime;
  return hash;
}

std::string HexKey(std::uint64_t key) {
  std::ostringstream os;
  os << std::hex << key;
  return os.str();
}

std::string Substitute(std::string text, std::string_view placeholder,
                       std::string_view value) {
  std::size_t pos = 0;
  while ((pos = text.find(placeholder, pos)) != std::string::npos) {
    text.replace(pos, placeholder.size(), value);
    pos += value.size();
  }
  return text;
}

// A fresh (or deterministically reused) directory for one tool invocation.
fs::path MakeWorkdir(const fs::path& workroot, std::string_view invocation_id,
                     std::string_view input_text, std::string_view tag) {
  std::string name =
      invocation_id.empty()
          ? std::string(tag) + "-" + HexKey(FnvMix(kFnvOffset, input_text))
          : std::string(invocation_id);
  fs::path dir = workroot / name;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorCode::kWorkdirError,
                "cannot create workdir " + dir.string() + ": " + ec.message());
  }
  return dir;
}

void WriteFileOrThrow(const fs::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    throw Error(ErrorCode::kWorkdirError, "cannot write " + path.string());
  }
}

struct CommandResult {
  int exit_code = 0;
  std::string output;
  double wall_seconds = 0.0;
};

// Runs `command` through /bin/sh in `workdir`, capturing stdout+stderr, with
// a hard wall-clock timeout.
CommandResult RunCommand(const std::string& command, const fs::path& workdir,
                         const std::map<std::string, std::string>& env,
                         double timeout_seconds) {
  int pipe_fds[2];
  if (pipe(pipe_fds) != 0) {
    throw Error(ErrorCode::kSpawnFailure,
                std::string("pipe: ") + std::strerror(errno));
  }
  auto start = std::chrono::steady_clock::now();
  pid_t pid = fork();
  if (pid < 0) {
    close(pipe_fds[0]);
    close(pipe_fds[1]);
    throw Error(ErrorCode::kSpawnFailure,
                std::string("fork: ") + std::strerror(errno));
  }
  if (pid == 0) {
    if (chdir(workdir.c_str()) != 0) _exit(126);
    dup2(pipe_fds[1], STDOUT_FILENO);
    dup2(pipe_fds[1], STDERR_FILENO);
    close(pipe_fds[0]);
    close(pipe_fds[1]);
    for (const auto& [key, value] : env) {
      setenv(key.c_str(), value.c_str(), 1);
    }
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(pipe_fds[1]);

  auto elapsed = [&start] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  };
  std::string output;
  bool timed_out = false;
  for (;;) {
    double remaining = timeout_seconds - elapsed();
    if (remaining <= 0) {
      timed_out = true;
      break;
    }
    pollfd pfd{pipe_fds[0], POLLIN, 0};
    int ready = poll(&pfd, 1, static_cast<int>(std::ceil(remaining * 1000)));
    if (ready < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (ready == 0) {
      timed_out = true;
      break;
    }
    char buffer[4096];
    ssize_t n = read(pipe_fds[0], buffer, sizeof buffer);
    if (n <= 0) break;
    output.append(buffer, static_cast<std::size_t>(n));
  }
  close(pipe_fds[0]);
  if (timed_out) {
    kill(pid, SIGKILL);
    waitpid(pid, nullptr, 0);
    throw Error(ErrorCode::kTimeout,
                "command exceeded " + std::to_string(timeout_seconds) +
                    "s: " + command);
  }
  int status = 0;
  waitpid(pid, &status, 0);
  CommandResult result;
  result.exit_code =
      WIFEXITED(status) ? WEXITSTATUS(status) : 128 + WTERMSIG(status);
  result.output = std::move(output);
  result.wall_seconds = elapsed();
  return result;
}

// Keeps the tail of a long log; failures usually surface at the end.
std::string Excerpt(const std::string& log) {
  constexpr std::size_t kMax = 4000;
  if (log.size() <= kMax) return log;
  return "..." + log.substr(log.size() - kMax);
}

}  // namespace

void ToolAdapter::Validate() const {
  if (command_template.find("{input}") == std::string::npos) {
    throw Error(ErrorCode::kInvalidConfig,
                "adapter '" + name + "': command_template must contain {input}");
  }
  if (!(timeout_seconds > 0)) {
    throw Error(ErrorCode::kInvalidConfig,
                "adapter '" + name + "': timeout must be positive");
  }
}

SynthResult RunSynthesis(std::string_view hls_code, std::string_view top,
                         const ToolAdapter& adapter,
                         const std::filesystem::path& workroot,
                         std::string_view invocation_id) {
  adapter.Validate();
  fs::path workdir = MakeWorkdir(workroot, invocation_id, hls_code, "synth");
  fs::path input_path = workdir / "input.cpp";
  WriteFileOrThrow(input_path, hls_code);

  std::string log;
  int exit_code = 0;
  double wall_seconds = 0.0;
  if (adapter.mock_mode) {
    std::ostringstream os;
    os << "mock synthesis adapter '" << adapter.name << "'\n"
       << "input: " << input_path.filename().string() << "\n"
       << "top: " << top << "\n";
    if (hls_code.find(kMockSynthFailDirective) != std::string_view::npos) {
      os << "ERROR: [HLS 200-70] mock failure directive present in input\n";
    } else {
      os << "INFO: [HLS] synthesis completed for top '" << top << "'\n";
    }
    log = os.str();
  } else {
    std::string command = Substitute(adapter.command_template, "{input}",
                                     input_path.string());
    command = Substitute(std::move(command), "{workdir}", workdir.string());
    command = Substitute(std::move(command), "{top}", std::string(top));
    CommandResult run =
        RunCommand(command, workdir, adapter.env, adapter.timeout_seconds);
    log = std::move(run.output);
    exit_code = run.exit_code;
    wall_seconds = run.wall_seconds;
  }
  WriteFileOrThrow(workdir / "synth.log", log);

  bool pattern_hit = false;
  for (const std::string& pattern : adapter.failure_patterns) {
    if (!pattern.empty() && log.find(pattern) != std::string::npos) {
      pattern_hit = true;
      break;
    }
  }
  SynthResult result;
  result.success = exit_code == 0 && !pattern_hit;
  result.log_excerpt = Excerpt(log);
  result.wall_time_seconds = wall_seconds;
  if (result.success) {
    fs::path rtl = workdir / "rtl.v";
    if (adapter.mock_mode) {
      std::string rtl_text = "// mock RTL emitted by adapter '" +
                             adapter.name + "'\nmodule " + std::string(top) +
                             ";\nendmodule\n";
      WriteFileOrThrow(rtl, rtl_text);
    }
    result.rtl_path = rtl;
  }
  return result;
}

SimResult RunConstrainedSim(const std::filesystem::path& rtl_path,
                            std::string_view testbench,
                            const ToolAdapter& adapter,
                            const std::filesystem::path& workroot,
                            std::string_view invocation_id) {
  adapter.Validate();
  if (!fs::exists(rtl_path)) {
    throw Error(ErrorCode::kSpawnFailure,
                "rtl_path does not exist: " + rtl_path.string());
  }
  fs::path workdir = MakeWorkdir(workroot, invocation_id, testbench, "sim");
  fs::path tb_path = workdir / "testbench.v";
  WriteFileOrThrow(tb_path, testbench);

  SimResult result;
  if (adapter.mock_mode) {
    // Echo every "mock-sim:" directive's payload as one log line.
    std::ostringstream os;
    std::istringstream lines{std::string(testbench)};
    std::string line;
    while (std::getline(lines, line)) {
      std::size_t at = line.find(kMockSimDirective);
      if (at == std::string::npos) continue;
      std::string payload = line.substr(at + kMockSimDirective.size());
      std::size_t start = payload.find_first_not_of(" \t");
      os << (start == std::string::npos ? "" : payload.substr(start)) << "\n";
    }
    result.log_text = os.str();
    result.exit_ok = true;
  } else {
    std::string command =
        Substitute(adapter.command_template, "{input}", tb_path.string());
    command = Substitute(std::move(command), "{workdir}", workdir.string());
    command = Substitute(std::move(command), "{top}", rtl_path.string());
    CommandResult run =
        RunCommand(command, workdir, adapter.env, adapter.timeout_seconds);
    result.log_text = std::move(run.output);
    result.exit_ok = run.exit_code == 0;
  }
  WriteFileOrThrow(workdir / "sim.log", result.log_text);
  return result;
}

std::uint64_t FixtureKey(const std::vector<ChatMessage>& messages) {
  std::uint64_t hash = kFnvOffset;
  for (const ChatMessage& message : messages) {
    hash = FnvMix(hash, message.role);
    hash = FnvMixByte(hash, 0x1f);
    hash = FnvMix(hash, message.content);
    hash = FnvMixByte(hash, 0x1e);
  }
  return hash;
}

LlmClient::LlmClient(ToolAdapter adapter) : adapter_(std::move(adapter)) {
  adapter_.Validate();
}

void LlmClient::RegisterMockFixture(const std::vector<ChatMessage>& messages,
                                    std::string response) {
  RegisterMockFixture(FixtureKey(messages), std::move(response));
}

void LlmClient::RegisterMockFixture(std::uint64_t key, std::string response) {
  std::lock_guard<std::mutex> lock(mu_);
  fixtures_[key] = std::move(response);
}

std::string LlmClient::Chat(const std::vector<ChatMessage>& messages) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    requests_.push_back(messages);
  }
  if (adapter_.mock_mode) return MockRespond(messages);

  // Split the endpoint into client base and request path.
  const std::string& endpoint = adapter_.endpoint;
  std::size_t scheme_end = endpoint.find("://");
  if (scheme_end == std::string::npos) {
    throw Error(ErrorCode::kInvalidConfig,
                "llm endpoint must be an http(s) URL: " + endpoint);
  }
  std::size_t path_start = endpoint.find('/', scheme_end + 3);
  std::string base = path_start == std::string::npos
                         ? endpoint
                         : endpoint.substr(0, path_start);
  std::string path =
      path_start == std::string::npos ? "/" : endpoint.substr(path_start);

  nlohmann::ordered_json body;
  body["model"] = adapter_.model;
  nlohmann::ordered_json message_list = nlohmann::ordered_json::array();
  for (const ChatMessage& message : messages) {
    message_list.push_back(
        {{"role", message.role}, {"content", message.content}});
  }
  body["messages"] = std::move(message_list);
  std::string payload = body.dump();

  httplib::Headers headers;
  if (const char* key = std::getenv(adapter_.credential_env.c_str());
      key != nullptr && key[0] != '\0') {
    headers.emplace("Authorization", std::string("Bearer ") + key);
  }

  httplib::Client client(base);
  client.set_connection_timeout(static_cast<int>(adapter_.timeout_seconds),
                                0);
  client.set_read_timeout(static_cast<int>(adapter_.timeout_seconds), 0);

  int last_status = 0;
  std::string last_error = "no response from " + base;
  for (int attempt = 0; attempt <= adapter_.max_retries; ++attempt) {
    if (attempt > 0) {
      int backoff_ms = adapter_.backoff_initial_ms << (attempt - 1);
      std::this_thread::sleep_for(std::chrono::milliseconds(backoff_ms));
    }
    httplib::Result res =
        client.Post(path, headers, payload, "application/json");
    if (!res) {
      last_status = 0;
      last_error = "transport error: " + httplib::to_string(res.error());
      continue;  // connection-level failures are retried like 5xx
    }
    last_status = res->status;
    if (res->status == 429 || res->status >= 500) {
      last_error = "status " + std::to_string(res->status);
      continue;
    }
    if (res->status != 200) {
      throw Error(ErrorCode::kHttpError,
                  "status " + std::to_string(res->status) + " from " + base +
                      path);
    }
    nlohmann::json reply = nlohmann::json::parse(res->body, nullptr, false);
    if (reply.is_discarded() || !reply.contains("choices") ||
        !reply["choices"].is_array() || reply["choices"].empty() ||
        !reply["choices"][0].contains("message") ||
        !reply["choices"][0]["message"].contains("content") ||
        !reply["choices"][0]["message"]["content"].is_string()) {
      throw Error(ErrorCode::kMalformedResponse,
                  "chat response has no choices[0].message.content");
    }
    return reply["choices"][0]["message"]["content"].get<std::string>();
  }
  if (last_status == 429) {
    throw Error(ErrorCode::kRateLimited,
                "still rate-limited after " +
                    std::to_string(adapter_.max_retries) + " retries");
  }
  throw Error(ErrorCode::kHttpError,
              last_error + " after " + std::to_string(adapter_.max_retries) +
                  " retries");
}

std::string LlmClient::MockRespond(const std::vector<ChatMessage>& messages) {
  std::uint64_t key = FixtureKey(messages);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = fixtures_.find(key);
    if (it != fixtures_.end()) return it->second;
  }

  // Derived fallback: a deterministic two-part porting answer shaped by the
  // last user message, so unseeded fixtures still exercise the pipeline.
  std::string user;
  for (const ChatMessage& message : messages) {
    if (message.role == "user") user = message.content;
  }
  if (user.find(kMockLlmMalformedDirective) != std::string::npos) {
    return "The porting request could not be completed and no sections are "
           "available.";
  }

  std::string module_name = "top_module";
  std::istringstream lines(user);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream words(line);
    std::string head;
    std::string name;
    if (words >> head && head == "module" && words >> name) {
      std::size_t cut = name.find_first_of("(;# \t");
      if (cut != std::string::npos) name = name.substr(0, cut);
      if (!name.empty()) module_name = name;
      break;
    }
  }

  unsigned width = 4 + static_cast<unsigned>(key % 5);       // 4..8
  unsigned iterations = 2 + static_cast<unsigned>(key % 7);  // 2..8
  unsigned taps = 1 + static_cast<unsigned>((key >> 8) % 4); // 1..4

  std::ostringstream code;
  code << "#include <ap_int.h>\n";
  code << "// ported from Verilog module " << module_name << "\n";
  if (user.find(kMockSynthFailDirective) != std::string::npos) {
    code << "// " << kMockSynthFailDirective << "\n";
  }
  code << "void top_module(ap_uint<" << width << "> v_in, ap_uint<" << width
       << ">& v_out, bool v_en) {\n";
  code << "#pragma HLS PIPELINE II=1\n";
  code << "  ap_uint<" << width << "> acc = " << taps << ";\n";
  code << "  if (v_en) {\n";
  code << "    for (int i = 0; i < " << iterations << "; i++) {\n";
  code << "      acc = acc + v_in;\n";
  code << "    }\n";
  code << "    v_out = acc;\n";
  code << "  }\n";
  code << "}\n";

  std::ostringstream instruction;
  instruction << "Design a hardware accumulator derived from the " << module_name
              << " interface. When the enable input is asserted, add the "
              << width << "-bit operand " << iterations
              << " times starting from " << taps
              << " and drive the result on the output port.";

  std::ostringstream response;
  response << "(1) Equivalent HLS Code\n\n```cpp\n"
           << code.str() << "```\n\n(2) Corresponding Prompt\n\n"
           << instruction.str() << "\n";
  return response.str();
}

std::vector<ChatMessage> BuildTestbenchAugmentationPrompt(
    std::string_view reference_code, std::string_view testbench,
    std::string_view instruction, const std::filesystem::path& template_path) {
  if (reference_code.empty()) {
    throw Error(ErrorCode::kEmptyInput, "reference_code is empty");
  }
  if (testbench.empty()) {
    throw Error(ErrorCode::kEmptyInput, "testbench is empty");
  }
  if (instruction.empty()) {
    throw Error(ErrorCode::kEmptyInput, "instruction is empty");
  }
  std::string system_text = internal::ReadTemplateFile(template_path);
  std::ostringstream user;
  user << "### Reference Code\n"
       << reference_code << "\n\n### Existing Testbench\n"
       << testbench << "\n\n### Instructions\n"
       << instruction << "\n";
  return {ChatMessage{"system", std::move(system_text)},
          ChatMessage{"user", user.str()}};
}

}  // namespace astkit
