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

#ifndef ASTKIT_SOURCE_H_
#define ASTKIT_SOURCE_H_

#include <filesystem>
#include <string>
#include <string_view>

namespace astkit {

// Half-open positions are error-prone to render for humans; spans are stored
// as 1-based inclusive (line, column) pairs at both ends.
struct SourceSpan {
  int start_line = 1;
  int start_col = 1;
  int end_line = 1;
  int end_col = 1;

  bool Contains(const SourceSpan& other) const;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

std::string ToString(const SourceSpan& span);

// One input file. `id` is the stable identifier used in dataset records and
// job ledgers; it defaults to the filename stem.
struct SourceFile {
  std::string path;
  std::string text;
  std::string id;

  static SourceFile FromText(std::string id, std::string text);
  static SourceFile Load(const std::filesystem::path& path);
};

// Slices the raw text covered by `span` (inclusive on both ends).
std::string SpanText(std::string_view source, const SourceSpan& span);

// Collapses every whitespace run (including newlines) to a single space and
// trims the ends.
std::string NormalizeWhitespace(std::string_view text);

}  // namespace astkit

#endif  // ASTKIT_SOURCE_H_
