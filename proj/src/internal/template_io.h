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

#ifndef ASTKIT_SRC_INTERNAL_TEMPLATE_IO_H_
#define ASTKIT_SRC_INTERNAL_TEMPLATE_IO_H_

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "astkit/error.h"

namespace astkit::internal {

// Reads a versioned prompt-template file verbatim. Missing or unreadable
// files are kTemplateNotFound so callers can distinguish prompt plumbing from
// ordinary I/O failures.
inline std::string ReadTemplateFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kTemplateNotFound,
                "template file not readable: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

// "porting_system.v1.txt" -> "v1"; files without a version tag report "v?".
inline std::string TemplateVersion(const std::filesystem::path& path) {
  std::string stem = path.stem().string();  // strips the trailing .txt
  std::size_t dot = stem.rfind('.');
  if (dot == std::string::npos || dot + 1 >= stem.size()) return "v?";
  return stem.substr(dot + 1);
}

}  // namespace astkit::internal

#endif  // ASTKIT_SRC_INTERNAL_TEMPLATE_IO_H_
