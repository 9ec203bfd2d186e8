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

#include "astkit/lexer.h"

#include <array>
#include <cctype>
#include <string_view>

#include "astkit/error.h"

namespace astkit {
namespace {

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool IsIdentCont(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

// Multi-character punctuators, longest first so that greedy matching works.
constexpr std::array<std::string_view, 21> kMultiPunct = {
    "<<=", ">>=", "::", "->", "<<", ">>", "<=", ">=", "==", "!=", "&&",
    "||",  "++",  "--", "+=", "-=", "*=", "/=", "%=", "&=", "|=",
};

constexpr std::string_view kSinglePunct = "+-*/%<>=!&|^~?:;,.(){}[]";

// Cursor over the source text that tracks 1-based line/column positions.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool StartsWith(std::string_view prefix) const {
    return text_.substr(pos_, prefix.size()) == prefix;
  }

  void Advance() {
    prev_line_ = line_;
    prev_col_ = col_;
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void Advance(std::size_t n) {
    for (std::size_t i = 0; i < n && !AtEnd(); ++i) Advance();
  }

  std::size_t pos() const { return pos_; }
  int line() const { return line_; }
  int col() const { return col_; }
  // Position of the most recently consumed character.
  int prev_line() const { return prev_line_; }
  int prev_col() const { return prev_col_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  int prev_line_ = 1;
  int prev_col_ = 1;
};

}  // namespace

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  Cursor cur(text);

  auto finish = [&](TokenKind kind, std::size_t start_pos, int start_line,
                    int start_col) {
    Token tok;
    tok.kind = kind;
    tok.offset = start_pos;
    tok.length = cur.pos() - start_pos;
    tok.text = std::string(text.substr(start_pos, tok.length));
    tok.span = SourceSpan{start_line, start_col, cur.prev_line(),
                          cur.prev_col()};
    tokens.push_back(std::move(tok));
  };

  while (!cur.AtEnd()) {
    char c = cur.Peek();
    if (std::isspace(static_cast<unsigned char>(c))) {
      cur.Advance();
      continue;
    }

    std::size_t start_pos = cur.pos();
    int start_line = cur.line();
    int start_col = cur.col();
    SourceSpan start_span{start_line, start_col, start_line, start_col};

    if (c == '#') {
      // Preprocessor directive: runs to the end of the physical line.
      while (!cur.AtEnd() && cur.Peek() != '\n') cur.Advance();
      finish(TokenKind::kDirective, start_pos, start_line, start_col);
      continue;
    }

    if (c == '/' && cur.Peek(1) == '/') {
      while (!cur.AtEnd() && cur.Peek() != '\n') cur.Advance();
      finish(TokenKind::kComment, start_pos, start_line, start_col);
      continue;
    }

    if (c == '/' && cur.Peek(1) == '*') {
      cur.Advance(2);
      bool closed = false;
      while (!cur.AtEnd()) {
        if (cur.Peek() == '*' && cur.Peek(1) == '/') {
          cur.Advance(2);
          closed = true;
          break;
        }
        cur.Advance();
      }
      if (!closed) {
        throw Error(ErrorCode::kUnterminatedComment,
                    "block comment is never closed", start_span);
      }
      finish(TokenKind::kComment, start_pos, start_line, start_col);
      continue;
    }

    if (c == '"' || c == '\'') {
      char quote = c;
      cur.Advance();
      bool closed = false;
      while (!cur.AtEnd() && cur.Peek() != '\n') {
        if (cur.Peek() == '\\' && cur.Peek(1) != '\0' && cur.Peek(1) != '\n') {
          cur.Advance(2);
          continue;
        }
        if (cur.Peek() == quote) {
          cur.Advance();
          closed = true;
          break;
        }
        cur.Advance();
      }
      if (!closed) {
        throw Error(ErrorCode::kUnterminatedString,
                    quote == '"' ? "string literal is never closed"
                                 : "character literal is never closed",
                    start_span);
      }
      finish(quote == '"' ? TokenKind::kString : TokenKind::kCharLit,
             start_pos, start_line, start_col);
      continue;
    }

    if (IsIdentStart(c)) {
      while (!cur.AtEnd() && IsIdentCont(cur.Peek())) cur.Advance();
      finish(TokenKind::kIdentifier, start_pos, start_line, start_col);
      continue;
    }

    if (IsDigit(c)) {
      // Integer or floating literal, with optional hex/binary prefix,
      // fraction, exponent, and suffix letters.
      if (c == '0' && (cur.Peek(1) == 'x' || cur.Peek(1) == 'X' ||
                       cur.Peek(1) == 'b' || cur.Peek(1) == 'B')) {
        cur.Advance(2);
        while (!cur.AtEnd() &&
               std::isxdigit(static_cast<unsigned char>(cur.Peek()))) {
          cur.Advance();
        }
      } else {
        while (!cur.AtEnd() && IsDigit(cur.Peek())) cur.Advance();
        if (cur.Peek() == '.' && IsDigit(cur.Peek(1))) {
          cur.Advance();
          while (!cur.AtEnd() && IsDigit(cur.Peek())) cur.Advance();
        }
        if ((cur.Peek() == 'e' || cur.Peek() == 'E') &&
            (IsDigit(cur.Peek(1)) ||
             ((cur.Peek(1) == '+' || cur.Peek(1) == '-') &&
              IsDigit(cur.Peek(2))))) {
          cur.Advance();
          if (cur.Peek() == '+' || cur.Peek() == '-') cur.Advance();
          while (!cur.AtEnd() && IsDigit(cur.Peek())) cur.Advance();
        }
      }
      while (cur.Peek() == 'u' || cur.Peek() == 'U' || cur.Peek() == 'l' ||
             cur.Peek() == 'L' || cur.Peek() == 'f' || cur.Peek() == 'F') {
        cur.Advance();
      }
      finish(TokenKind::kNumber, start_pos, start_line, start_col);
      continue;
    }

    bool matched = false;
    for (std::string_view p : kMultiPunct) {
      if (cur.StartsWith(p)) {
        cur.Advance(p.size());
        finish(TokenKind::kPunct, start_pos, start_line, start_col);
        matched = true;
        break;
      }
    }
    if (matched) continue;

    if (kSinglePunct.find(c) != std::string_view::npos) {
      cur.Advance();
      finish(TokenKind::kPunct, start_pos, start_line, start_col);
      continue;
    }

    throw Error(ErrorCode::kIllegalCharacter,
                "unexpected character '" + std::string(1, c) + "'",
                start_span);
  }

  return tokens;
}

}  // namespace astkit
