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

#ifndef ASTKIT_OPTIMIZE_H_
#define ASTKIT_OPTIMIZE_H_

#include <set>

#include "astkit/ast.h"

namespace astkit {

// Kinds carrying control or data semantics are never allowed in
// redundant_kinds; Validate() rejects such configs.
struct OptimizeConfig {
  std::set<NodeKind> redundant_kinds = {NodeKind::kComment, NodeKind::kInclude};
  std::set<NodeKind> collapsible_kinds = {NodeKind::kExprStmt,
                                          NodeKind::kCompoundStmt};

  // Throws kInvalidConfig when redundant_kinds intersects the protected set
  // {FunctionDef, IfStmt, ForStmt, WhileStmt, SwitchStmt, ReturnStmt,
  //  Assignment, Declaration, CallExpr}.
  void Validate() const;
};

// Returns a new tree (input untouched) in which
//   (a) no node of a redundant kind remains — a removed node's children are
//       spliced into its position, so nothing below it is lost, and
//   (b) no node of a collapsible kind with exactly one child remains — it is
//       replaced by that child. A CompoundStmt collapses only when nested
//       directly under another CompoundStmt; collapsing a function body or a
//       branch body would change what control-flow handlers point at.
//
// Traversal is post-order, so collapses cascade in one pass. Surviving nodes
// keep their node ids. The root itself is exempt from removal and collapse.
// Pragma nodes are not redundant by default: they survive and stay visible to
// the serializer and dataset statistics.
AstNode Optimize(const AstNode& tree,
                 const OptimizeConfig& config = OptimizeConfig{});

}  // namespace astkit

#endif  // ASTKIT_OPTIMIZE_H_
