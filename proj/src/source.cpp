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

#include "astkit/source.h"

#include <cctype>
#include <fstream>
#include <sstream>
#include <tuple>
#include <vector>

#include "astkit/error.h"

namespace astkit {

bool SourceSpan::Contains(const SourceSpan& other) const {
  auto head = std::tie(start_line, start_col);
  auto other_head = std::tie(other.start_line, other.start_col);
  auto tail = std::tie(end_line, end_col);
  auto other_tail = std::tie(other.end_line, other.end_col);
  return head <= other_head && other_tail <= tail;
}

std::string ToString(const SourceSpan& span) {
  std::ostringstream os;
  os << span.start_line << ":" << span.start_col << "-" << span.end_line << ":"
     << span.end_col;
  return os.str();
}

SourceFile SourceFile::FromText(std::string id, std::string text) {
  SourceFile f;
  f.id = std::move(id);
  f.text = std::move(text);
  f.path = "<memory>";
  return f;
}

SourceFile SourceFile::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  SourceFile f;
  f.path = path.string();
  f.text = buf.str();
  f.id = path.stem().string();
  return f;
}

std::string SpanText(std::string_view source, const SourceSpan& span) {
  // Byte offset of the start of each 1-based line.
  std::vector<std::size_t> line_start = {0};
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (source[i] == '\n') line_start.push_back(i + 1);
  }
  auto offset_of = [&](int line, int col) -> std::size_t {
    if (line < 1 || static_cast<std::size_t>(line) > line_start.size()) {
      return source.size();
    }
    return line_start[static_cast<std::size_t>(line) - 1] +
           static_cast<std::size_t>(col - 1);
  };
  std::size_t begin = offset_of(span.start_line, span.start_col);
  std::size_t end = offset_of(span.end_line, span.end_col);
  if (begin >= source.size()) return "";
  end = std::min(end, source.size() - 1);
  if (end < begin) return "";
  return std::string(source.substr(begin, end - begin + 1));
}

std::string NormalizeWhitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace astkit
