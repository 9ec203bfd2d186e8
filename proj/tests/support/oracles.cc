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

#include "tests/support/oracles.h"

#include <set>
#include <tuple>

namespace astkit {
namespace testing {
namespace {

// One node's edges per the Handlers table. Kept as a plain if-ladder over
// the published case list rather than reusing astkit::Handlers.
void MatchHandlersTable(const AstNode& n, std::vector<CfgEdge>& out) {
  const auto& c = n.children;
  if (n.kind == NodeKind::kIfStmt) {
    // {(N, then-branch, then), (N, else-branch, else)}, else omitted when
    // the branch does not exist.
    if (c.size() > 1) out.push_back({n.node_id, c[1].node_id, EdgeKind::kThen});
    if (c.size() > 2) out.push_back({n.node_id, c[2].node_id, EdgeKind::kElse});
  } else if (n.kind == NodeKind::kForStmt || n.kind == NodeKind::kWhileStmt) {
    // {(N, body, loop_body), (body, N, loop_back)}; the body is the final
    // child and only exists when the statement has more than one child.
    if (c.size() > 1) {
      const AstNode& body = c[c.size() - 1];
      out.push_back({n.node_id, body.node_id, EdgeKind::kLoopBody});
      out.push_back({body.node_id, n.node_id, EdgeKind::kLoopBack});
    }
  } else if (n.kind == NodeKind::kSwitchStmt) {
    // {(N, c_i, case) for each CaseClause}.
    for (const AstNode& child : c) {
      if (child.kind == NodeKind::kCaseClause) {
        out.push_back({n.node_id, child.node_id, EdgeKind::kCase});
      }
    }
  } else if (n.kind == NodeKind::kFunctionDef) {
    // {(N, body, func_body)} where body is the first CompoundStmt child.
    for (const AstNode& child : c) {
      if (child.kind == NodeKind::kCompoundStmt) {
        out.push_back({n.node_id, child.node_id, EdgeKind::kFuncBody});
        break;
      }
    }
  } else if (n.kind == NodeKind::kReturnStmt) {
    // {(N, return-expression, return_flow)}, omitted for a bare return.
    if (!c.empty()) {
      out.push_back({n.node_id, c[0].node_id, EdgeKind::kReturnFlow});
    }
  } else if (n.kind == NodeKind::kExprStmt) {
    if (!c.empty()) out.push_back({n.node_id, c[0].node_id, EdgeKind::kExpr});
  } else if (n.kind == NodeKind::kDeclaration) {
    // {(N, initializer, decl)}, omitted for an uninitialized declaration.
    if (!c.empty()) out.push_back({n.node_id, c[0].node_id, EdgeKind::kDecl});
  } else if (n.kind == NodeKind::kAssignment) {
    if (c.size() > 1) {
      out.push_back({n.node_id, c[1].node_id, EdgeKind::kAssign});
    }
  } else if (n.kind == NodeKind::kCallExpr) {
    // {(N, callee, call)}.
    if (!c.empty()) out.push_back({n.node_id, c[0].node_id, EdgeKind::kCall});
  }
  // All other kinds: no edges.
}

}  // namespace

std::vector<CfgEdge> BruteForceCfgEdges(const AstNode& tree) {
  std::vector<CfgEdge> edges;
  std::set<std::tuple<int, int, int>> seen;
  std::vector<const AstNode*> stack = {&tree};
  while (!stack.empty()) {
    const AstNode* node = stack.back();
    stack.pop_back();
    std::vector<CfgEdge> local;
    MatchHandlersTable(*node, local);
    for (const CfgEdge& e : local) {
      if (seen.insert({e.from, e.to, static_cast<int>(e.kind)}).second) {
        edges.push_back(e);
      }
    }
    for (auto it = node->children.rbegin(); it != node->children.rend();
         ++it) {
      stack.push_back(&*it);
    }
  }
  return edges;
}

std::size_t DpLcsLength(const std::vector<std::string>& a,
                        const std::vector<std::string>& b) {
  std::vector<std::vector<std::size_t>> table(
      a.size() + 1, std::vector<std::size_t>(b.size() + 1, 0));
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      if (a[i - 1] == b[j - 1]) {
        table[i][j] = table[i - 1][j - 1] + 1;
      } else {
        table[i][j] =
            table[i - 1][j] > table[i][j - 1] ? table[i - 1][j] : table[i][j - 1];
      }
    }
  }
  return table[a.size()][b.size()];
}

double DpRougeL(const std::vector<std::string>& candidate,
                const std::vector<std::string>& reference, double beta) {
  std::size_t lcs = DpLcsLength(candidate, reference);
  if (lcs == 0) return 0.0;
  double beta_sq = beta * beta;
  return (1.0 + beta_sq) * static_cast<double>(lcs) /
         (static_cast<double>(candidate.size()) +
          beta_sq * static_cast<double>(reference.size()));
}

}  // namespace testing
}  // namespace astkit
