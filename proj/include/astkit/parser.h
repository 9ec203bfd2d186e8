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

#ifndef ASTKIT_PARSER_H_
#define ASTKIT_PARSER_H_

#include <string>
#include <string_view>

#include "astkit/ast.h"
#include "astkit/source.h"

namespace astkit {

// Recursive-descent parser for the HLS-C subset:
//   - function definitions with value/reference parameters
//   - static/const declarations with array dimensions and brace initializers
//   - assignments (incl. compound ops), if/else, for, while, switch/case,
//     return, call statements
//   - binary/unary expressions, array subscripts, identifiers, literals
//   - #pragma and #include directives, line and block comments
//
// Templated types like ap_uint<11> are kept as opaque type text. Anything
// outside the subset (pointers, member access, casts, struct definitions,
// do/while, goto, ternary ?:, ...) raises kUnsupportedConstruct instead of
// mis-parsing. No macro expansion is performed; #include lines are recorded
// and otherwise ignored.
//
// Pragmas and comments attach as children of the enclosing compound statement
// (or of the translation unit), at their source position. Parsing is a pure
// function of the text: node ids are assigned in pre-order starting at 0, so
// two parses of the same text produce identical trees.
AstNode Parse(const SourceFile& src);

// Convenience overload for tests and tools.
AstNode ParseText(std::string_view text);

// Returns the FunctionDef subtree named `name` inside a translation unit.
// Throws kFunctionNotFound / kAmbiguousFunction.
const AstNode& FindFunction(const AstNode& translation_unit,
                            std::string_view name);

// Default lookup name for the synthesis entry function.
inline constexpr std::string_view kDefaultTopName = "top_module";

// Renders a tree back to compilable text with canonical whitespace. For any
// well-formed tree, Parse(PrettyPrint(t)) is structurally equal to t.
std::string PrettyPrint(const AstNode& node);

}  // namespace astkit

#endif  // ASTKIT_PARSER_H_
