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

#ifndef ASTKIT_LEXER_H_
#define ASTKIT_LEXER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "astkit/source.h"

namespace astkit {

enum class TokenKind {
  kIdentifier,  // identifiers and keywords
  kNumber,      // integer and floating literals, hex/octal included
  kString,      // "..." with escapes
  kCharLit,     // '...' with escapes
  kPunct,       // operators and punctuation, longest-match
  kComment,     // // line or /* block */ comments, text verbatim
  kDirective,   // one whole #pragma or #include line
  kEndOfFile,
};

std::string_view TokenKindName(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::kEndOfFile;
  std::string text;  // verbatim source text of the token
  SourceSpan span;
  std::size_t offset = 0;  // byte offset into the source
  std::size_t length = 0;
};

// Splits `text` into tokens. Every input byte belongs to exactly one token or
// to skipped whitespace; empty input yields an empty list (no kEndOfFile
// token — the parser appends its own sentinel). Throws Error with
// kUnterminatedComment, kUnterminatedString or kIllegalCharacter.
std::vector<Token> Tokenize(std::string_view text);

}  // namespace astkit

#endif  // ASTKIT_LEXER_H_
