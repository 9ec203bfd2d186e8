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

#include "astkit/config.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "astkit/error.h"
#include "nlohmann/json.hpp"

namespace astkit {
namespace {

std::optional<ToolAdapter::Kind> AdapterKindFromName(std::string_view name) {
  if (name == "llm") return ToolAdapter::Kind::kLlm;
  if (name == "synthesis") return ToolAdapter::Kind::kSynthesis;
  if (name == "simulation") return ToolAdapter::Kind::kSimulation;
  return std::nullopt;
}

template <typename T>
void ReadField(const nlohmann::json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidConfig,
                std::string("bad value for '") + key + "': " + e.what());
  }
}

void ReadPathField(const nlohmann::json& j, const char* key,
                   std::filesystem::path& out) {
  std::string text = out.string();
  ReadField(j, key, text);
  out = text;
}

ToolAdapter AdapterFromJson(const nlohmann::json& j) {
  ToolAdapter adapter;
  ReadField(j, "name", adapter.name);
  if (j.contains("kind")) {
    std::string kind_name = j.at("kind").get<std::string>();
    auto kind = AdapterKindFromName(kind_name);
    if (!kind.has_value()) {
      throw Error(ErrorCode::kInvalidConfig,
                  "unknown adapter kind '" + kind_name +
                      "' (expected llm|synthesis|simulation)");
    }
    adapter.kind = *kind;
  }
  ReadField(j, "command_template", adapter.command_template);
  ReadField(j, "timeout_seconds", adapter.timeout_seconds);
  ReadField(j, "env", adapter.env);
  ReadField(j, "mock_mode", adapter.mock_mode);
  ReadField(j, "failure_patterns", adapter.failure_patterns);
  ReadField(j, "endpoint", adapter.endpoint);
  ReadField(j, "model", adapter.model);
  ReadField(j, "credential_env", adapter.credential_env);
  ReadField(j, "max_retries", adapter.max_retries);
  ReadField(j, "backoff_initial_ms", adapter.backoff_initial_ms);
  ReadField(j, "parallelism", adapter.parallelism);
  ReadField(j, "rate_limit_per_sec", adapter.rate_limit_per_sec);
  return adapter;
}

std::set<NodeKind> KindSetFromJson(const nlohmann::json& j, const char* key) {
  std::set<NodeKind> kinds;
  for (const auto& entry : j.at(key)) {
    std::string name = entry.get<std::string>();
    std::optional<NodeKind> kind = NodeKindFromName(name);
    if (!kind.has_value()) {
      throw Error(ErrorCode::kInvalidConfig,
                  std::string("unknown node kind '") + name + "' in " + key);
    }
    kinds.insert(*kind);
  }
  return kinds;
}

}  // namespace

void GlobalConfig::Validate() const {
  if (workers < 1) {
    throw Error(ErrorCode::kInvalidConfig, "workers must be >= 1");
  }
  if (!(leakage_threshold > 0.0) || leakage_threshold > 1.0) {
    throw Error(ErrorCode::kInvalidConfig,
                "leakage_threshold must be in (0, 1]");
  }
  for (const ToolAdapter& adapter : adapters) {
    adapter.Validate();
  }
  optimize.Validate();
}

const ToolAdapter* GlobalConfig::FindAdapter(ToolAdapter::Kind kind) const {
  for (const ToolAdapter& adapter : adapters) {
    if (adapter.kind == kind) return &adapter;
  }
  return nullptr;
}

std::filesystem::path GlobalConfig::PortingTemplatePath() const {
  return templates_dir / "porting_system.v1.txt";
}

std::filesystem::path GlobalConfig::TestbenchTemplatePath() const {
  return templates_dir / "testbench_augmentation.v1.txt";
}

GlobalConfig DefaultConfig() {
  GlobalConfig config;
  ToolAdapter llm;
  llm.name = "mock-llm";
  llm.kind = ToolAdapter::Kind::kLlm;
  ToolAdapter synth;
  synth.name = "mock-synth";
  synth.kind = ToolAdapter::Kind::kSynthesis;
  ToolAdapter sim;
  sim.name = "mock-sim";
  sim.kind = ToolAdapter::Kind::kSimulation;
  config.adapters = {llm, synth, sim};
  return config;
}

GlobalConfig LoadConfig(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open config " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  nlohmann::json j = nlohmann::json::parse(buffer.str(), nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw Error(ErrorCode::kInvalidConfig,
                "config is not a JSON object: " + path.string());
  }

  GlobalConfig config = DefaultConfig();
  if (j.contains("adapters")) {
    config.adapters.clear();
    for (const auto& entry : j.at("adapters")) {
      config.adapters.push_back(AdapterFromJson(entry));
    }
  }
  if (j.contains("optimize")) {
    const nlohmann::json& opt = j.at("optimize");
    if (opt.contains("redundant_kinds")) {
      config.optimize.redundant_kinds =
          KindSetFromJson(opt, "redundant_kinds");
    }
    if (opt.contains("collapsible_kinds")) {
      config.optimize.collapsible_kinds =
          KindSetFromJson(opt, "collapsible_kinds");
    }
  }
  ReadField(j, "leakage_threshold", config.leakage_threshold);
  ReadField(j, "k_set", config.k_set);
  ReadField(j, "workers", config.workers);
  ReadField(j, "seed", config.seed);
  ReadField(j, "top_name", config.top_name);
  ReadPathField(j, "templates_dir", config.templates_dir);
  ReadPathField(j, "workdir_root", config.workdir_root);
  ReadField(j, "rouge_beta", config.rouge_beta);

  config.Validate();
  return config;
}

void ApplyEnvOverrides(GlobalConfig& config) {
  auto env = [](const char* name) -> std::optional<std::string> {
    const char* value = std::getenv(name);
    if (value == nullptr || value[0] == '\0') return std::nullopt;
    return std::string(value);
  };
  try {
    if (auto v = env("ASTKIT_WORKERS")) config.workers = std::stoi(*v);
    if (auto v = env("ASTKIT_SEED")) config.seed = std::stoull(*v);
    if (auto v = env("ASTKIT_LEAKAGE_THRESHOLD")) {
      config.leakage_threshold = std::stod(*v);
    }
  } catch (const std::exception&) {
    throw Error(ErrorCode::kInvalidConfig,
                "ASTKIT_* numeric override is not a number");
  }
  if (auto v = env("ASTKIT_TEMPLATES_DIR")) config.templates_dir = *v;
  if (auto v = env("ASTKIT_WORKDIR_ROOT")) config.workdir_root = *v;
  if (auto v = env("ASTKIT_TOP_NAME")) config.top_name = *v;
}

}  // namespace astkit
