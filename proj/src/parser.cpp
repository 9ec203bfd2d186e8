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

#include "astkit/parser.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "astkit/error.h"
#include "astkit/lexer.h"

namespace astkit {
namespace {

constexpr std::array<std::string_view, 11> kStatementKeywords = {
    "if",      "else",   "for",   "while", "switch", "case",
    "default", "return", "break", "do",    "goto",
};

constexpr std::array<std::string_view, 10> kUnsupportedTopKeywords = {
    "struct", "class",     "union",    "enum",     "typedef",
    "using",  "namespace", "template", "operator", "extern",
};

constexpr std::array<std::string_view, 11> kAssignOps = {
    "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=",
};

// Words that may continue a multi-word builtin type ("unsigned int",
// "long long").
constexpr std::array<std::string_view, 9> kBuiltinTypeWords = {
    "void", "bool", "char", "short", "int", "long", "float", "double",
    "signed",
};

constexpr std::array<std::string_view, 4> kSignSizeWords = {
    "unsigned", "signed", "long", "short"};

constexpr std::array<std::string_view, 3> kQualifierWords = {"static", "const",
                                                             "volatile"};

template <std::size_t N>
bool Contains(const std::array<std::string_view, N>& set, std::string_view s) {
  return std::find(set.begin(), set.end(), s) != set.end();
}

// Binary operator precedence; 0 means "not a binary operator".
int BinaryPrecedence(std::string_view op) {
  if (op == "||") return 1;
  if (op == "&&") return 2;
  if (op == "|") return 3;
  if (op == "^") return 4;
  if (op == "&") return 5;
  if (op == "==" || op == "!=") return 6;
  if (op == "<" || op == ">" || op == "<=" || op == ">=") return 7;
  if (op == "<<" || op == ">>") return 8;
  if (op == "+" || op == "-") return 9;
  if (op == "*" || op == "/" || op == "%") return 10;
  return 0;
}

class Parser {
 public:
  explicit Parser(const SourceFile& src)
      : src_(src), tokens_(Tokenize(src.text)) {
    Token eof;
    eof.kind = TokenKind::kEndOfFile;
    eof.offset = src_.text.size();
    eof.length = 0;
    if (tokens_.empty()) {
      eof.span = SourceSpan{1, 1, 1, 1};
    } else {
      const SourceSpan& last = tokens_.back().span;
      eof.span = SourceSpan{last.end_line, last.end_col + 1, last.end_line,
                            last.end_col + 1};
    }
    tokens_.push_back(std::move(eof));
  }

  AstNode ParseTranslationUnit() {
    AstNode tu = Make(NodeKind::kTranslationUnit);
    ParseStatementListInto(tu, /*top_level=*/true);
    if (tokens_.size() > 1) {
      tu.span = SourceSpan{tokens_.front().span.start_line,
                           tokens_.front().span.start_col,
                           tokens_[tokens_.size() - 2].span.end_line,
                           tokens_[tokens_.size() - 2].span.end_col};
    } else {
      tu.span = SourceSpan{1, 1, 1, 1};
    }
    int next_id = 0;
    AssignIds(tu, next_id);
    return tu;
  }

 private:
  // --- token access -------------------------------------------------------

  const Token& Raw(std::size_t i) const {
    return tokens_[std::min(i, tokens_.size() - 1)];
  }

  // Current significant token. Comments in front of it are stashed for the
  // enclosing statement list to re-emit as Comment nodes.
  const Token& Cur() {
    while (tokens_[pos_].kind == TokenKind::kComment) {
      pending_comments_.push_back(tokens_[pos_]);
      ++pos_;
    }
    return tokens_[pos_];
  }

  // Current token with no comment skipping, for statement-list positions
  // where comments are themselves statements.
  const Token& CurRaw() const { return tokens_[pos_]; }

  void Advance() {
    if (tokens_[pos_].kind != TokenKind::kEndOfFile) {
      last_significant_ = pos_;
      ++pos_;
    }
  }

  void AdvanceTo(std::size_t next_pos) {
    last_significant_ = next_pos == 0 ? 0 : next_pos - 1;
    pos_ = next_pos;
  }

  bool CurIs(std::string_view punct) {
    const Token& t = Cur();
    return t.kind == TokenKind::kPunct && t.text == punct;
  }

  bool CurIsIdent(std::string_view word) {
    const Token& t = Cur();
    return t.kind == TokenKind::kIdentifier && t.text == word;
  }

  bool AcceptPunct(std::string_view punct) {
    if (CurIs(punct)) {
      Advance();
      return true;
    }
    return false;
  }

  void ExpectPunct(std::string_view punct, std::string_view context) {
    if (!AcceptPunct(punct)) {
      const Token& t = Cur();
      throw Error(ErrorCode::kSyntaxError,
                  "expected '" + std::string(punct) + "' " +
                      std::string(context) + ", found '" + Describe(t) + "'",
                  t.span);
    }
  }

  Token ExpectIdentifierToken(std::string_view context) {
    const Token& t = Cur();
    if (t.kind != TokenKind::kIdentifier) {
      throw Error(ErrorCode::kSyntaxError,
                  "expected identifier " + std::string(context) + ", found '" +
                      Describe(t) + "'",
                  t.span);
    }
    Token copy = t;
    Advance();
    return copy;
  }

  static std::string Describe(const Token& t) {
    return t.kind == TokenKind::kEndOfFile ? "end of file" : t.text;
  }

  // --- span helpers --------------------------------------------------------

  // Index of the current significant token; productions record this before
  // consuming and close their span with SpanFrom afterwards.
  std::size_t Mark() {
    Cur();
    return pos_;
  }

  SourceSpan SpanFrom(std::size_t start_index) const {
    const SourceSpan& a = tokens_[start_index].span;
    const SourceSpan& b = tokens_[last_significant_].span;
    return SourceSpan{a.start_line, a.start_col, b.end_line, b.end_col};
  }

  static AstNode Make(NodeKind kind, std::string name = "",
                      std::string type_text = "") {
    AstNode n;
    n.kind = kind;
    n.name = std::move(name);
    n.type_text = std::move(type_text);
    return n;
  }

  static SourceSpan Join(const SourceSpan& a, const SourceSpan& b) {
    return SourceSpan{a.start_line, a.start_col, b.end_line, b.end_col};
  }

  static void AssignIds(AstNode& node, int& next_id) {
    node.node_id = next_id++;
    for (AstNode& child : node.children) AssignIds(child, next_id);
  }

  std::string RawSlice(std::size_t first_tok, std::size_t last_tok) const {
    const Token& a = tokens_[first_tok];
    const Token& b = tokens_[last_tok];
    return std::string(
        std::string_view(src_.text).substr(a.offset,
                                           b.offset + b.length - a.offset));
  }

  // --- lookahead classification -------------------------------------------

  // Skips comments from raw index i without stashing.
  std::size_t SkipCommentsFrom(std::size_t i) const {
    while (Raw(i).kind == TokenKind::kComment) ++i;
    return i;
  }

  // Scans a balanced <...> starting at raw index `i` (which must point at
  // "<"). Returns the index one past the closing ">" or npos when it is not
  // a plausible template argument list.
  std::size_t ScanTemplateArgs(std::size_t i) const {
    int depth = 0;
    while (Raw(i).kind != TokenKind::kEndOfFile) {
      const Token& t = Raw(i);
      if (t.kind == TokenKind::kPunct) {
        if (t.text == "<") {
          ++depth;
        } else if (t.text == ">") {
          if (--depth == 0) return i + 1;
        } else if (t.text == ">>") {
          depth -= 2;
          if (depth <= 0) return i + 1;
        } else if (t.text == ";" || t.text == "{" || t.text == "}") {
          return std::string::npos;
        }
      }
      ++i;
    }
    return std::string::npos;
  }

  // True when the tokens ahead read as `qualifiers type declarator` followed
  // by `terminator`. Used to split declarations from expression statements.
  bool LooksLikeDeclarationOrFunction(std::string_view terminator) {
    std::size_t i = SkipCommentsFrom(pos_);
    int ident_groups = 0;
    while (true) {
      i = SkipCommentsFrom(i);
      const Token& t = Raw(i);
      if (t.kind == TokenKind::kIdentifier) {
        if (Contains(kStatementKeywords, t.text)) return false;
        ++i;
        ++ident_groups;
        // Scoped name segments.
        while (Raw(i).kind == TokenKind::kPunct && Raw(i).text == "::" &&
               Raw(i + 1).kind == TokenKind::kIdentifier) {
          i += 2;
        }
        if (Raw(i).kind == TokenKind::kPunct && Raw(i).text == "<") {
          std::size_t after = ScanTemplateArgs(i);
          if (after == std::string::npos) continue;
          i = after;
        }
        continue;
      }
      if (t.kind == TokenKind::kPunct && (t.text == "&" || t.text == "*") &&
          ident_groups >= 1) {
        ++i;
        continue;
      }
      break;
    }
    if (ident_groups < 2) return false;
    const Token& follower = Raw(SkipCommentsFrom(i));
    return follower.kind == TokenKind::kPunct && follower.text == terminator;
  }

  bool LooksLikeDeclaration() {
    return LooksLikeDeclarationOrFunction(";") ||
           LooksLikeDeclarationOrFunction("=") ||
           LooksLikeDeclarationOrFunction("[");
  }

  bool LooksLikeFunctionDef() { return LooksLikeDeclarationOrFunction("("); }

  // --- statement lists ------------------------------------------------------

  void DrainPendingComments(AstNode& parent) {
    for (Token& t : pending_comments_) {
      AstNode c = Make(NodeKind::kComment, std::move(t.text));
      c.span = t.span;
      parent.children.push_back(std::move(c));
    }
    pending_comments_.clear();
  }

  AstNode ParseDirective() {
    const Token& t = CurRaw();
    std::string_view body = t.text;
    body.remove_prefix(1);  // '#'
    auto trim = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
      return s;
    };
    body = trim(body);
    std::size_t word_end = 0;
    while (word_end < body.size() &&
           !std::isspace(static_cast<unsigned char>(body[word_end]))) {
      ++word_end;
    }
    std::string_view keyword = body.substr(0, word_end);
    std::string_view rest = trim(body.substr(word_end));
    AstNode node;
    if (keyword == "pragma") {
      node = Make(NodeKind::kPragma, std::string(rest));
    } else if (keyword == "include") {
      node = Make(NodeKind::kInclude, std::string(rest));
    } else {
      throw Error(ErrorCode::kUnsupportedConstruct,
                  "preprocessor directive #" + std::string(keyword), t.span);
    }
    node.span = t.span;
    Advance();
    return node;
  }

  void ParseStatementListInto(AstNode& parent, bool top_level) {
    while (true) {
      const Token& t = CurRaw();
      if (t.kind == TokenKind::kEndOfFile) {
        if (!top_level) {
          throw Error(ErrorCode::kSyntaxError,
                      "expected '}' before end of file", t.span);
        }
        break;
      }
      if (!top_level && t.kind == TokenKind::kPunct && t.text == "}") break;
      if (t.kind == TokenKind::kComment) {
        AstNode c = Make(NodeKind::kComment, t.text);
        c.span = t.span;
        parent.children.push_back(std::move(c));
        ++pos_;
        continue;
      }
      if (t.kind == TokenKind::kDirective) {
        parent.children.push_back(ParseDirective());
        continue;
      }
      parent.children.push_back(top_level ? ParseExternal()
                                          : ParseStatement());
      DrainPendingComments(parent);
    }
  }

  // --- top level -------------------------------------------------------------

  AstNode ParseExternal() {
    const Token& t = Cur();
    if (t.kind == TokenKind::kIdentifier &&
        Contains(kUnsupportedTopKeywords, t.text)) {
      throw Error(ErrorCode::kUnsupportedConstruct,
                  "'" + t.text + "' declaration", t.span);
    }
    if (LooksLikeFunctionDef()) return ParseFunctionDef();
    if (LooksLikeDeclaration()) return ParseDeclaration(/*expect_semi=*/true);
    throw Error(ErrorCode::kSyntaxError,
                "expected a function definition or declaration, found '" +
                    Describe(t) + "'",
                t.span);
  }

  AstNode ParseFunctionDef() {
    std::size_t mark = Mark();
    std::string return_type = ParseTypeText();
    Token name = ExpectIdentifierToken("as function name");
    ExpectPunct("(", "to open the parameter list");
    AstNode params = ParseParamList();
    if (CurIs(";")) {
      throw Error(ErrorCode::kUnsupportedConstruct, "function prototype",
                  Cur().span);
    }
    if (!CurIs("{")) {
      throw Error(ErrorCode::kSyntaxError,
                  "expected '{' to open the function body, found '" +
                      Describe(Cur()) + "'",
                  Cur().span);
    }
    AstNode body = ParseCompound();
    AstNode fn = Make(NodeKind::kFunctionDef, name.text, return_type);
    fn.children.push_back(std::move(params));
    fn.children.push_back(std::move(body));
    fn.span = SpanFrom(mark);
    return fn;
  }

  AstNode ParseParamList() {
    // The '(' has already been consumed.
    std::size_t open = last_significant_;
    AstNode list = Make(NodeKind::kParamList);
    if (CurIsIdent("void") && Raw(SkipCommentsFrom(pos_ + 1)).kind ==
                                  TokenKind::kPunct &&
        Raw(SkipCommentsFrom(pos_ + 1)).text == ")") {
      Advance();  // void
      Advance();  // )
      list.span = Join(tokens_[open].span, tokens_[last_significant_].span);
      return list;
    }
    if (!AcceptPunct(")")) {
      while (true) {
        list.children.push_back(ParseParam());
        if (AcceptPunct(",")) continue;
        ExpectPunct(")", "to close the parameter list");
        break;
      }
    }
    list.span = Join(tokens_[open].span, tokens_[last_significant_].span);
    return list;
  }

  AstNode ParseParam() {
    std::size_t mark = Mark();
    std::string type = ParseTypeText();
    Token name = ExpectIdentifierToken("as parameter name");
    std::string declarator = name.text;
    declarator += ParseArrayDims();
    AstNode param = Make(NodeKind::kParam, declarator, type);
    param.span = SpanFrom(mark);
    return param;
  }

  // Parses `static const ap_uint<8>&`-style specifier text. Storage and cv
  // qualifiers are kept in source order; template arguments are copied
  // verbatim from the source; references attach without a space.
  std::string ParseTypeText() {
    std::vector<std::string> words;
    while (Cur().kind == TokenKind::kIdentifier &&
           Contains(kQualifierWords, Cur().text)) {
      words.push_back(Cur().text);
      Advance();
    }
    const Token& base = Cur();
    if (base.kind != TokenKind::kIdentifier ||
        Contains(kStatementKeywords, base.text)) {
      throw Error(ErrorCode::kSyntaxError,
                  "expected a type name, found '" + Describe(base) + "'",
                  base.span);
    }
    if (Contains(kUnsupportedTopKeywords, base.text)) {
      throw Error(ErrorCode::kUnsupportedConstruct,
                  "'" + base.text + "' type", base.span);
    }
    std::string word = base.text;
    Advance();
    while (CurIs("::")) {
      Advance();
      word += "::";
      word += ExpectIdentifierToken("after '::'").text;
    }
    words.push_back(word);
    while (Contains(kSignSizeWords, words.back()) &&
           Cur().kind == TokenKind::kIdentifier &&
           Contains(kBuiltinTypeWords, Cur().text)) {
      words.push_back(Cur().text);
      Advance();
    }
    std::string text;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (i > 0) text += ' ';
      text += words[i];
    }
    if (CurIs("<")) {
      std::size_t after = ScanTemplateArgs(pos_);
      if (after == std::string::npos) {
        throw Error(ErrorCode::kSyntaxError,
                    "unterminated template argument list", Cur().span);
      }
      text += RawSlice(pos_, after - 1);
      AdvanceTo(after);
    }
    while (CurIs("&")) {
      text += '&';
      Advance();
    }
    if (CurIs("*")) {
      throw Error(ErrorCode::kUnsupportedConstruct, "pointer type",
                  Cur().span);
    }
    return text;
  }

  // Zero or more `[dim]` groups, copied verbatim (brackets included).
  std::string ParseArrayDims() {
    std::string dims;
    while (CurIs("[")) {
      std::size_t open = pos_;
      int depth = 0;
      std::size_t i = pos_;
      while (Raw(i).kind != TokenKind::kEndOfFile) {
        if (Raw(i).kind == TokenKind::kPunct) {
          if (Raw(i).text == "[") ++depth;
          if (Raw(i).text == "]" && --depth == 0) break;
        }
        ++i;
      }
      if (Raw(i).kind == TokenKind::kEndOfFile) {
        throw Error(ErrorCode::kSyntaxError, "unterminated array dimension",
                    tokens_[open].span);
      }
      dims += RawSlice(open, i);
      AdvanceTo(i + 1);
    }
    return dims;
  }

  // --- statements -------------------------------------------------------------

  AstNode ParseStatement() {
    const Token& t = Cur();
    if (t.kind == TokenKind::kPunct && t.text == "{") return ParseCompound();
    if (t.kind == TokenKind::kIdentifier) {
      if (t.text == "if") return ParseIf();
      if (t.text == "for") return ParseFor();
      if (t.text == "while") return ParseWhile();
      if (t.text == "switch") return ParseSwitch();
      if (t.text == "return") return ParseReturn();
      if (t.text == "do" || t.text == "goto" || t.text == "break" ||
          t.text == "continue" || t.text == "else" || t.text == "case" ||
          t.text == "default") {
        throw Error(ErrorCode::kUnsupportedConstruct,
                    "'" + t.text + "' statement here", t.span);
      }
      if (Contains(kUnsupportedTopKeywords, t.text)) {
        throw Error(ErrorCode::kUnsupportedConstruct,
                    "'" + t.text + "' declaration", t.span);
      }
    }
    if (LooksLikeDeclaration()) return ParseDeclaration(/*expect_semi=*/true);
    std::size_t mark = Mark();
    AstNode expr = ParseAssignmentOrExpression();
    ExpectPunct(";", "after expression statement");
    if (expr.kind == NodeKind::kAssignment) {
      expr.span = SpanFrom(mark);
      return expr;
    }
    AstNode stmt = Make(NodeKind::kExprStmt);
    stmt.children.push_back(std::move(expr));
    stmt.span = SpanFrom(mark);
    return stmt;
  }

  AstNode ParseCompound() {
    std::size_t mark = Mark();
    ExpectPunct("{", "to open a block");
    AstNode block = Make(NodeKind::kCompoundStmt);
    ParseStatementListInto(block, /*top_level=*/false);
    ExpectPunct("}", "to close the block");
    block.span = SpanFrom(mark);
    return block;
  }

  AstNode ParseDeclaration(bool expect_semi) {
    std::size_t mark = Mark();
    std::string type = ParseTypeText();
    Token name = ExpectIdentifierToken("as declared name");
    std::string declarator = name.text;
    declarator += ParseArrayDims();
    if (CurIs(",")) {
      throw Error(ErrorCode::kUnsupportedConstruct,
                  "multiple declarators in one declaration", Cur().span);
    }
    AstNode decl = Make(NodeKind::kDeclaration, declarator, type);
    if (AcceptPunct("=")) {
      if (CurIs("{")) {
        decl.children.push_back(ParseBraceLiteral());
      } else {
        decl.children.push_back(ParseExpression());
      }
    }
    if (expect_semi) ExpectPunct(";", "after declaration");
    decl.span = SpanFrom(mark);
    return decl;
  }

  AstNode ParseBraceLiteral() {
    std::size_t open = pos_;
    int depth = 0;
    std::size_t i = pos_;
    while (Raw(i).kind != TokenKind::kEndOfFile) {
      if (Raw(i).kind == TokenKind::kPunct) {
        if (Raw(i).text == "{") ++depth;
        if (Raw(i).text == "}" && --depth == 0) break;
      }
      ++i;
    }
    if (Raw(i).kind == TokenKind::kEndOfFile) {
      throw Error(ErrorCode::kSyntaxError, "unterminated brace initializer",
                  tokens_[open].span);
    }
    AstNode lit = Make(NodeKind::kLiteral, RawSlice(open, i));
    lit.span = Join(tokens_[open].span, tokens_[i].span);
    AdvanceTo(i + 1);
    return lit;
  }

  AstNode ParseIf() {
    std::size_t mark = Mark();
    Advance();  // if
    ExpectPunct("(", "after 'if'");
    AstNode cond = ParseExpression();
    ExpectPunct(")", "after the if condition");
    AstNode then_branch = ParseStatement();
    AstNode node = Make(NodeKind::kIfStmt);
    node.children.push_back(std::move(cond));
    node.children.push_back(std::move(then_branch));
    if (CurIsIdent("else")) {
      Advance();
      node.children.push_back(ParseStatement());
    }
    node.span = SpanFrom(mark);
    return node;
  }

  AstNode ParseFor() {
    std::size_t mark = Mark();
    Advance();  // for
    ExpectPunct("(", "after 'for'");
    if (CurIs(";")) {
      throw Error(ErrorCode::kUnsupportedConstruct,
                  "for loop with empty init clause", Cur().span);
    }
    AstNode init = LooksLikeDeclaration()
                       ? ParseDeclaration(/*expect_semi=*/false)
                       : ParseAssignmentOrExpression();
    ExpectPunct(";", "after the for-loop init clause");
    if (CurIs(";")) {
      throw Error(ErrorCode::kUnsupportedConstruct,
                  "for loop with empty condition", Cur().span);
    }
    AstNode cond = ParseExpression();
    ExpectPunct(";", "after the for-loop condition");
    if (CurIs(")")) {
      throw Error(ErrorCode::kUnsupportedConstruct,
                  "for loop with empty step clause", Cur().span);
    }
    AstNode step = ParseAssignmentOrExpression();
    ExpectPunct(")", "after the for-loop header");
    AstNode body = ParseStatement();
    AstNode node = Make(NodeKind::kForStmt);
    node.children.push_back(std::move(init));
    node.children.push_back(std::move(cond));
    node.children.push_back(std::move(step));
    node.children.push_back(std::move(body));
    node.span = SpanFrom(mark);
    return node;
  }

  AstNode ParseWhile() {
    std::size_t mark = Mark();
    Advance();  // while
    ExpectPunct("(", "after 'while'");
    AstNode cond = ParseExpression();
    ExpectPunct(")", "after the while condition");
    AstNode body = ParseStatement();
    AstNode node = Make(NodeKind::kWhileStmt);
    node.children.push_back(std::move(cond));
    node.children.push_back(std::move(body));
    node.span = SpanFrom(mark);
    return node;
  }

  AstNode ParseSwitch() {
    std::size_t mark = Mark();
    Advance();  // switch
    ExpectPunct("(", "after 'switch'");
    AstNode selector = ParseExpression();
    ExpectPunct(")", "after the switch selector");
    ExpectPunct("{", "to open the switch body");
    AstNode node = Make(NodeKind::kSwitchStmt);
    node.children.push_back(std::move(selector));
    while (!AcceptPunct("}")) {
      node.children.push_back(ParseCaseClause());
    }
    node.span = SpanFrom(mark);
    return node;
  }

  AstNode ParseCaseClause() {
    std::size_t mark = Mark();
    AstNode clause = Make(NodeKind::kCaseClause);
    if (CurIsIdent("case")) {
      Advance();
      std::size_t label_start = Mark();
      ParseExpression();
      clause.name = NormalizeWhitespace(RawSlice(label_start, last_significant_));
      ExpectPunct(":", "after the case label");
    } else if (CurIsIdent("default")) {
      Advance();
      clause.name = "default";
      ExpectPunct(":", "after 'default'");
    } else {
      throw Error(ErrorCode::kSyntaxError,
                  "expected 'case', 'default' or '}' in switch body, found '" +
                      Describe(Cur()) + "'",
                  Cur().span);
    }
    while (true) {
      const Token& t = CurRaw();
      if (t.kind == TokenKind::kComment) {
        AstNode c = Make(NodeKind::kComment, t.text);
        c.span = t.span;
        clause.children.push_back(std::move(c));
        ++pos_;
        continue;
      }
      if (t.kind == TokenKind::kDirective) {
        clause.children.push_back(ParseDirective());
        continue;
      }
      if (t.kind == TokenKind::kEndOfFile) {
        throw Error(ErrorCode::kSyntaxError,
                    "expected '}' before end of file", t.span);
      }
      if (t.kind == TokenKind::kPunct && t.text == "}") break;
      if (t.kind == TokenKind::kIdentifier &&
          (t.text == "case" || t.text == "default")) {
        break;
      }
      if (t.kind == TokenKind::kIdentifier && t.text == "break") {
        Advance();
        ExpectPunct(";", "after 'break'");
        clause.type_text = "break";
        const Token& next = Cur();
        bool clause_end =
            (next.kind == TokenKind::kPunct && next.text == "}") ||
            (next.kind == TokenKind::kIdentifier &&
             (next.text == "case" || next.text == "default"));
        if (!clause_end) {
          throw Error(ErrorCode::kUnsupportedConstruct,
                      "statements after 'break' in a case clause", next.span);
        }
        DrainPendingComments(clause);
        break;
      }
      clause.children.push_back(ParseStatement());
      DrainPendingComments(clause);
    }
    clause.span = SpanFrom(mark);
    return clause;
  }

  AstNode ParseReturn() {
    std::size_t mark = Mark();
    Advance();  // return
    AstNode node = Make(NodeKind::kReturnStmt);
    if (!CurIs(";")) {
      node.children.push_back(ParseExpression());
    }
    ExpectPunct(";", "after 'return'");
    node.span = SpanFrom(mark);
    return node;
  }

  // --- expressions -------------------------------------------------------------

  // expression [assign-op expression]; returns an Assignment node or the
  // bare expression. Used for statements and for-loop init/step clauses.
  AstNode ParseAssignmentOrExpression() {
    AstNode lhs = ParseExpression();
    const Token& t = Cur();
    if (t.kind == TokenKind::kPunct && Contains(kAssignOps, t.text)) {
      std::string op = t.text;
      Advance();
      AstNode rhs = ParseExpression();
      AstNode node = Make(NodeKind::kAssignment, op);
      node.span = Join(lhs.span, rhs.span);
      node.children.push_back(std::move(lhs));
      node.children.push_back(std::move(rhs));
      return node;
    }
    return lhs;
  }

  AstNode ParseExpression() { return ParseBinary(1); }

  AstNode ParseBinary(int min_prec) {
    AstNode lhs = ParseUnary();
    while (true) {
      const Token& t = Cur();
      if (t.kind != TokenKind::kPunct) break;
      if (t.text == "?") {
        throw Error(ErrorCode::kUnsupportedConstruct,
                    "ternary ?: expression", t.span);
      }
      int prec = BinaryPrecedence(t.text);
      if (prec == 0 || prec < min_prec) break;
      std::string op = t.text;
      Advance();
      AstNode rhs = ParseBinary(prec + 1);
      AstNode node = Make(NodeKind::kBinaryExpr, op);
      node.span = Join(lhs.span, rhs.span);
      node.children.push_back(std::move(lhs));
      node.children.push_back(std::move(rhs));
      lhs = std::move(node);
    }
    return lhs;
  }

  AstNode ParseUnary() {
    const Token& t = Cur();
    if (t.kind == TokenKind::kPunct) {
      if (t.text == "!" || t.text == "~" || t.text == "-" || t.text == "+" ||
          t.text == "++" || t.text == "--") {
        std::size_t mark = pos_;
        std::string op = t.text;
        Advance();
        AstNode operand = ParseUnary();
        AstNode node = Make(NodeKind::kUnaryExpr, op);
        node.span = Join(tokens_[mark].span, operand.span);
        node.children.push_back(std::move(operand));
        return node;
      }
      if (t.text == "&" || t.text == "*") {
        throw Error(ErrorCode::kUnsupportedConstruct,
                    t.text == "&" ? "address-of expression"
                                  : "pointer dereference",
                    t.span);
      }
    }
    return ParsePostfix();
  }

  AstNode ParsePostfix() {
    AstNode expr = ParsePrimary();
    while (true) {
      const Token& t = Cur();
      if (t.kind != TokenKind::kPunct) break;
      if (t.text == "(") {
        Advance();
        AstNode call = Make(NodeKind::kCallExpr);
        SourceSpan start = expr.span;
        call.children.push_back(std::move(expr));
        if (!AcceptPunct(")")) {
          while (true) {
            call.children.push_back(ParseExpression());
            if (AcceptPunct(",")) continue;
            ExpectPunct(")", "to close the argument list");
            break;
          }
        }
        call.span = Join(start, tokens_[last_significant_].span);
        expr = std::move(call);
        continue;
      }
      if (t.text == "[") {
        Advance();
        AstNode index = ParseExpression();
        ExpectPunct("]", "to close the subscript");
        AstNode sub = Make(NodeKind::kArraySubscript);
        sub.span = Join(expr.span, tokens_[last_significant_].span);
        sub.children.push_back(std::move(expr));
        sub.children.push_back(std::move(index));
        expr = std::move(sub);
        continue;
      }
      if (t.text == "++" || t.text == "--") {
        AstNode node = Make(NodeKind::kUnaryExpr, t.text, "postfix");
        node.span = Join(expr.span, t.span);
        node.children.push_back(std::move(expr));
        Advance();
        expr = std::move(node);
        continue;
      }
      if (t.text == "." || t.text == "->") {
        throw Error(ErrorCode::kUnsupportedConstruct, "member access",
                    t.span);
      }
      break;
    }
    return expr;
  }

  AstNode ParsePrimary() {
    const Token& t = Cur();
    if (t.kind == TokenKind::kPunct && t.text == "(") {
      Advance();
      // A type keyword directly after '(' can only be a C-style cast; no
      // expression in this subset starts with one.
      const Token& head = Cur();
      if (head.kind == TokenKind::kIdentifier &&
          (Contains(kBuiltinTypeWords, head.text) ||
           Contains(kSignSizeWords, head.text))) {
        throw Error(ErrorCode::kUnsupportedConstruct, "C-style cast",
                    head.span);
      }
      AstNode inner = ParseExpression();
      ExpectPunct(")", "to close the parenthesized expression");
      return inner;
    }
    if (t.kind == TokenKind::kIdentifier) {
      if (Contains(kStatementKeywords, t.text)) {
        throw Error(ErrorCode::kSyntaxError,
                    "unexpected keyword '" + t.text + "' in an expression",
                    t.span);
      }
      std::size_t mark = pos_;
      std::string name = t.text;
      Advance();
      while (CurIs("::")) {
        Advance();
        name += "::";
        name += ExpectIdentifierToken("after '::'").text;
      }
      AstNode node = Make(NodeKind::kIdentifier, name);
      node.span = SpanFrom(mark);
      return node;
    }
    if (t.kind == TokenKind::kNumber || t.kind == TokenKind::kString ||
        t.kind == TokenKind::kCharLit) {
      AstNode node = Make(NodeKind::kLiteral, t.text);
      node.span = t.span;
      Advance();
      return node;
    }
    throw Error(ErrorCode::kSyntaxError,
                "expected an expression, found '" + Describe(t) + "'",
                t.span);
  }

  const SourceFile& src_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t last_significant_ = 0;
  std::vector<Token> pending_comments_;
};

}  // namespace

AstNode Parse(const SourceFile& src) {
  Parser parser(src);
  return parser.ParseTranslationUnit();
}

AstNode ParseText(std::string_view text) {
  return Parse(SourceFile::FromText("<memory>", std::string(text)));
}

const AstNode& FindFunction(const AstNode& translation_unit,
                            std::string_view name) {
  const AstNode* found = nullptr;
  for (const AstNode& child : translation_unit.children) {
    if (child.kind == NodeKind::kFunctionDef && child.name == name) {
      if (found != nullptr) {
        throw Error(ErrorCode::kAmbiguousFunction,
                    "multiple definitions of '" + std::string(name) + "'",
                    child.span);
      }
      found = &child;
    }
  }
  if (found == nullptr) {
    throw Error(ErrorCode::kFunctionNotFound,
                "no function named '" + std::string(name) + "'");
  }
  return *found;
}

}  // namespace astkit
