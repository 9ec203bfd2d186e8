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

#ifndef ASTKIT_CFG_H_
#define ASTKIT_CFG_H_

#include <string>
#include <vector>

#include "astkit/ast.h"

namespace astkit {

enum class EdgeKind {
  kThen,
  kElse,
  kLoopBody,
  kLoopBack,
  kCase,
  kFuncBody,
  kReturnFlow,
  kExpr,
  kDecl,
  kAssign,
  kCall,
};

std::string_view EdgeKindName(EdgeKind kind);

struct CfgEdge {
  int from = 0;
  int to = 0;
  EdgeKind kind = EdgeKind::kExpr;

  friend bool operator==(const CfgEdge&, const CfgEdge&) = default;
  friend auto operator<=>(const CfgEdge&, const CfgEdge&) = default;
};

struct Cfg {
  std::vector<int> nodes;      // every node id of the analyzed tree
  std::vector<CfgEdge> edges;  // union of per-node handler edges, pre-order
};

// The per-node handler table. Total over any tree; a handler that needs a
// child which is absent contributes nothing. Child roles:
//   IfStmt       then = child 1, else = child 2 (edge omitted without else)
//   For/While    body = last child, needs >= 2 children; emits the body edge
//                and the back edge body -> loop
//   SwitchStmt   one case edge per CaseClause child
//   FunctionDef  body = the CompoundStmt child
//   ReturnStmt   return expression = child 0 (bare return: none)
//   ExprStmt     inner expression = child 0
//   Declaration  initializer = child 0 (uninitialized: none)
//   Assignment   right-hand side = child 1
//   CallExpr     callee = child 0
//   otherwise    no edges
std::vector<CfgEdge> Handlers(const AstNode& node);

// Visits every node of `tree` in pre-order and unions its handler edges.
// Cfg.nodes holds all node ids; duplicate (from, to, kind) triples are kept
// once. Deterministic: identical trees give identical edge lists.
Cfg AnalyzeControlFlow(const AstNode& tree);

// DOT rendering; edges are labelled with their kind.
std::string ToDot(const Cfg& cfg, const AstNode& tree);

std::string ToJson(const Cfg& cfg);

}  // namespace astkit

#endif  // ASTKIT_CFG_H_
