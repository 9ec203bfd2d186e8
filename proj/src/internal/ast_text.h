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

#ifndef ASTKIT_SRC_INTERNAL_AST_TEXT_H_
#define ASTKIT_SRC_INTERNAL_AST_TEXT_H_

#include <string>

#include "astkit/ast.h"

namespace astkit {
namespace internal {

// Canonical one-line rendering of an expression-position node: single spaces
// around binary and assignment operators, tight subscripts/calls/unary ops,
// no trailing semicolon. Declarations and assignments render the way they
// appear in for-loop headers ("int i = 0", "i = 0"). Shared by the
// pretty-printer and the AST serializer so both emit identical surface text.
std::string ExprText(const AstNode& node);

}  // namespace internal
}  // namespace astkit

#endif  // ASTKIT_SRC_INTERNAL_AST_TEXT_H_
