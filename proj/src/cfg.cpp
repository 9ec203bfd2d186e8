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

#include "astkit/cfg.h"

#include <set>
#include <sstream>
#include <unordered_map>

#include "nlohmann/json.hpp"

namespace astkit {

std::string_view EdgeKindName(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::kThen:
      return "then";
    case EdgeKind::kElse:
      return "else";
    case EdgeKind::kLoopBody:
      return "loop_body";
    case EdgeKind::kLoopBack:
      return "loop_back";
    case EdgeKind::kCase:
      return "case";
    case EdgeKind::kFuncBody:
      return "func_body";
    case EdgeKind::kReturnFlow:
      return "return_flow";
    case EdgeKind::kExpr:
      return "expr";
    case EdgeKind::kDecl:
      return "decl";
    case EdgeKind::kAssign:
      return "assign";
    case EdgeKind::kCall:
      return "call";
  }
  return "unknown";
}

std::vector<CfgEdge> Handlers(const AstNode& node) {
  std::vector<CfgEdge> edges;
  auto edge = [&](const AstNode& to, EdgeKind kind) {
    edges.push_back(CfgEdge{node.node_id, to.node_id, kind});
  };
  switch (node.kind) {
    case NodeKind::kIfStmt:
      if (node.children.size() >= 2) edge(node.children[1], EdgeKind::kThen);
      if (node.children.size() >= 3) edge(node.children[2], EdgeKind::kElse);
      break;
    case NodeKind::kForStmt:
    case NodeKind::kWhileStmt:
      if (node.children.size() >= 2) {
        const AstNode& body = node.children.back();
        edge(body, EdgeKind::kLoopBody);
        edges.push_back(CfgEdge{body.node_id, node.node_id,
                                EdgeKind::kLoopBack});
      }
      break;
    case NodeKind::kSwitchStmt:
      for (const AstNode& child : node.children) {
        if (child.kind == NodeKind::kCaseClause) edge(child, EdgeKind::kCase);
      }
      break;
    case NodeKind::kFunctionDef:
      if (const AstNode* body = node.FindChild(NodeKind::kCompoundStmt)) {
        edge(*body, EdgeKind::kFuncBody);
      }
      break;
    case NodeKind::kReturnStmt:
      if (!node.children.empty()) {
        edge(node.children[0], EdgeKind::kReturnFlow);
      }
      break;
    case NodeKind::kExprStmt:
      if (!node.children.empty()) edge(node.children[0], EdgeKind::kExpr);
      break;
    case NodeKind::kDeclaration:
      if (!node.children.empty()) edge(node.children[0], EdgeKind::kDecl);
      break;
    case NodeKind::kAssignment:
      if (node.children.size() >= 2) edge(node.children[1], EdgeKind::kAssign);
      break;
    case NodeKind::kCallExpr:
      if (!node.children.empty()) edge(node.children[0], EdgeKind::kCall);
      break;
    default:
      break;
  }
  return edges;
}

Cfg AnalyzeControlFlow(const AstNode& tree) {
  Cfg cfg;
  std::set<CfgEdge> seen;
  ForEachNode(tree, [&](const AstNode& node) {
    cfg.nodes.push_back(node.node_id);
    for (const CfgEdge& edge : Handlers(node)) {
      if (seen.insert(edge).second) cfg.edges.push_back(edge);
    }
  });
  return cfg;
}

std::string ToDot(const Cfg& cfg, const AstNode& tree) {
  std::unordered_map<int, const AstNode*> by_id;
  ForEachNode(tree,
              [&](const AstNode& node) { by_id[node.node_id] = &node; });
  std::ostringstream os;
  os << "digraph cfg {\n";
  for (int id : cfg.nodes) {
    os << "  n" << id << " [label=\"";
    auto it = by_id.find(id);
    if (it != by_id.end()) {
      os << NodeKindName(it->second->kind);
      if (!it->second->name.empty()) os << "\\n" << it->second->name;
    } else {
      os << id;
    }
    os << "\"];\n";
  }
  for (const CfgEdge& edge : cfg.edges) {
    os << "  n" << edge.from << " -> n" << edge.to << " [label=\""
       << EdgeKindName(edge.kind) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string ToJson(const Cfg& cfg) {
  nlohmann::ordered_json j;
  j["nodes"] = cfg.nodes;
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const CfgEdge& edge : cfg.edges) {
    edges.push_back({{"from", edge.from},
                     {"to", edge.to},
                     {"kind", std::string(EdgeKindName(edge.kind))}});
  }
  j["edges"] = std::move(edges);
  return j.dump(2);
}

}  // namespace astkit
