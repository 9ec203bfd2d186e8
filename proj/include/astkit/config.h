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

#ifndef ASTKIT_CONFIG_H_
#define ASTKIT_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "astkit/optimize.h"
#include "astkit/toolbridge.h"

namespace astkit {

inline constexpr std::string_view kToolkitVersion = "0.1.0";

// One versioned config file drives the whole pipeline. JSON on disk; selected
// keys can be overridden through ASTKIT_* environment variables (see
// ApplyEnvOverrides).
struct GlobalConfig {
  std::vector<ToolAdapter> adapters;
  OptimizeConfig optimize;
  double leakage_threshold = 0.4;
  std::vector<int> k_set = {1, 5, 10};
  int workers = 1;
  std::uint64_t seed = 0;
  std::string top_name = "top_module";
  std::filesystem::path templates_dir = "templates";
  std::filesystem::path workdir_root = ".astkit-work";
  double rouge_beta = 1.0;

  // Throws kInvalidConfig: workers >= 1, leakage_threshold in (0, 1], and
  // every adapter valid.
  void Validate() const;

  const ToolAdapter* FindAdapter(ToolAdapter::Kind kind) const;
  std::filesystem::path PortingTemplatePath() const;
  std::filesystem::path TestbenchTemplatePath() const;
};

GlobalConfig LoadConfig(const std::filesystem::path& path);
GlobalConfig DefaultConfig();

// ASTKIT_WORKERS, ASTKIT_SEED, ASTKIT_TEMPLATES_DIR, ASTKIT_WORKDIR_ROOT,
// ASTKIT_LEAKAGE_THRESHOLD, ASTKIT_TOP_NAME override the loaded values.
void ApplyEnvOverrides(GlobalConfig& config);

}  // namespace astkit

#endif  // ASTKIT_CONFIG_H_
