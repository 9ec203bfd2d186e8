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

#include "astkit/optimize.h"

#include <utility>
#include <vector>

#include "astkit/error.h"

namespace astkit {
namespace {

constexpr NodeKind kProtectedKinds[] = {
    NodeKind::kFunctionDef, NodeKind::kIfStmt,     NodeKind::kForStmt,
    NodeKind::kWhileStmt,   NodeKind::kSwitchStmt, NodeKind::kReturnStmt,
    NodeKind::kAssignment,  NodeKind::kDeclaration, NodeKind::kCallExpr,
};

bool Collapsible(const AstNode& node, const AstNode* parent,
                 const OptimizeConfig& config) {
  if (node.children.size() != 1) return false;
  if (config.collapsible_kinds.find(node.kind) ==
      config.collapsible_kinds.end()) {
    return false;
  }
  // A block collapses only when nested directly under another block;
  // function bodies and control-statement branches keep their CompoundStmt
  // so control-flow handlers keep a stable target.
  if (node.kind == NodeKind::kCompoundStmt) {
    return parent != nullptr && parent->kind == NodeKind::kCompoundStmt;
  }
  return true;
}

// Post-order rewrite. Returns the surviving nodes that take `node`'s
// position in its parent: the node itself, its spliced-up children when the
// node's kind is redundant, or its single child after a collapse.
std::vector<AstNode> Rewrite(const AstNode& node, const AstNode* parent,
                             const OptimizeConfig& config) {
  AstNode copy;
  copy.kind = node.kind;
  copy.name = node.name;
  copy.type_text = node.type_text;
  copy.span = node.span;
  copy.node_id = node.node_id;
  for (const AstNode& child : node.children) {
    std::vector<AstNode> survivors = Rewrite(child, &node, config);
    for (AstNode& s : survivors) copy.children.push_back(std::move(s));
  }

  if (config.redundant_kinds.find(copy.kind) != config.redundant_kinds.end()) {
    return std::move(copy.children);
  }
  // Re-check the collapse rule against the rewritten child count: removals
  // below may have left exactly one child.
  if (Collapsible(copy, parent, config)) {
    std::vector<AstNode> one;
    one.push_back(std::move(copy.children.front()));
    return one;
  }
  std::vector<AstNode> kept;
  kept.push_back(std::move(copy));
  return kept;
}

}  // namespace

void OptimizeConfig::Validate() const {
  for (NodeKind kind : kProtectedKinds) {
    if (redundant_kinds.find(kind) != redundant_kinds.end()) {
      throw Error(ErrorCode::kInvalidConfig,
                  "redundant_kinds may not contain " +
                      std::string(NodeKindName(kind)) +
                      "; control/data semantics are never deleted");
    }
  }
}

namespace {

// One optimization pass. The root is exempt from removal and collapse: its
// children are rewritten in place instead of going through Rewrite's return
// protocol.
AstNode Pass(const AstNode& tree, const OptimizeConfig& config) {
  AstNode root;
  root.kind = tree.kind;
  root.name = tree.name;
  root.type_text = tree.type_text;
  root.span = tree.span;
  root.node_id = tree.node_id;
  for (const AstNode& child : tree.children) {
    std::vector<AstNode> survivors = Rewrite(child, &tree, config);
    for (AstNode& s : survivors) root.children.push_back(std::move(s));
  }
  return root;
}

}  // namespace

AstNode Optimize(const AstNode& tree, const OptimizeConfig& config) {
  config.Validate();
  // Splices can hand a collapsible node a new parent, so a single pass may
  // leave fresh single-child wrappers behind. Iterate to the fixpoint; every
  // changing pass removes at least one node, so this terminates.
  AstNode current = Pass(tree, config);
  while (true) {
    AstNode next = Pass(current, config);
    if (StructurallyEqual(next, current)) return current;
    current = std::move(next);
  }
}

}  // namespace astkit
