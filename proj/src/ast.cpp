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

#include "astkit/ast.h"

#include <array>
#include <utility>

#include "nlohmann/json.hpp"

namespace astkit {
namespace {

constexpr std::array<std::pair<NodeKind, std::string_view>, 24> kKindNames = {{
    {NodeKind::kTranslationUnit, "TranslationUnit"},
    {NodeKind::kInclude, "Include"},
    {NodeKind::kPragma, "Pragma"},
    {NodeKind::kFunctionDef, "FunctionDef"},
    {NodeKind::kParamList, "ParamList"},
    {NodeKind::kParam, "Param"},
    {NodeKind::kTypeName, "TypeName"},
    {NodeKind::kCompoundStmt, "CompoundStmt"},
    {NodeKind::kDeclaration, "Declaration"},
    {NodeKind::kAssignment, "Assignment"},
    {NodeKind::kIfStmt, "IfStmt"},
    {NodeKind::kForStmt, "ForStmt"},
    {NodeKind::kWhileStmt, "WhileStmt"},
    {NodeKind::kSwitchStmt, "SwitchStmt"},
    {NodeKind::kCaseClause, "CaseClause"},
    {NodeKind::kReturnStmt, "ReturnStmt"},
    {NodeKind::kExprStmt, "ExprStmt"},
    {NodeKind::kCallExpr, "CallExpr"},
    {NodeKind::kBinaryExpr, "BinaryExpr"},
    {NodeKind::kUnaryExpr, "UnaryExpr"},
    {NodeKind::kArraySubscript, "ArraySubscript"},
    {NodeKind::kIdentifier, "Identifier"},
    {NodeKind::kLiteral, "Literal"},
    {NodeKind::kComment, "Comment"},
}};

}  // namespace

std::string_view NodeKindName(NodeKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "Unknown";
}

std::optional<NodeKind> NodeKindFromName(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

const AstNode* AstNode::FindChild(NodeKind child_kind) const {
  for (const AstNode& child : children) {
    if (child.kind == child_kind) return &child;
  }
  return nullptr;
}

std::size_t AstNode::CountNodes() const {
  std::size_t count = 1;
  for (const AstNode& child : children) count += child.CountNodes();
  return count;
}

bool StructurallyEqual(const AstNode& a, const AstNode& b) {
  if (a.kind != b.kind || a.name != b.name || a.type_text != b.type_text) {
    return false;
  }
  if (a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!StructurallyEqual(a.children[i], b.children[i])) return false;
  }
  return true;
}

void ForEachNode(const AstNode& node,
                 const std::function<void(const AstNode&)>& visit) {
  visit(node);
  for (const AstNode& child : node.children) ForEachNode(child, visit);
}

namespace {

nlohmann::ordered_json NodeToJson(const AstNode& node) {
  nlohmann::ordered_json j;
  j["kind"] = std::string(NodeKindName(node.kind));
  if (!node.name.empty()) j["name"] = node.name;
  if (!node.type_text.empty()) j["type_text"] = node.type_text;
  j["span"] = {{"start_line", node.span.start_line},
               {"start_col", node.span.start_col},
               {"end_line", node.span.end_line},
               {"end_col", node.span.end_col}};
  j["node_id"] = node.node_id;
  nlohmann::ordered_json kids = nlohmann::ordered_json::array();
  for (const AstNode& child : node.children) kids.push_back(NodeToJson(child));
  j["children"] = std::move(kids);
  return j;
}

}  // namespace

std::string ToJson(const AstNode& node) { return NodeToJson(node).dump(2); }

}  // namespace astkit
