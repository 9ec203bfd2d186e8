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

#ifndef ASTKIT_AST_H_
#define ASTKIT_AST_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "astkit/source.h"

namespace astkit {

enum class NodeKind {
  kTranslationUnit,
  kInclude,
  kPragma,
  kFunctionDef,
  kParamList,
  kParam,
  kTypeName,
  kCompoundStmt,
  kDeclaration,
  kAssignment,
  kIfStmt,
  kForStmt,
  kWhileStmt,
  kSwitchStmt,
  kCaseClause,
  kReturnStmt,
  kExprStmt,
  kCallExpr,
  kBinaryExpr,
  kUnaryExpr,
  kArraySubscript,
  kIdentifier,
  kLiteral,
  kComment,
};

std::string_view NodeKindName(NodeKind kind);
std::optional<NodeKind> NodeKindFromName(std::string_view name);

// One node of the typed syntax tree. Field use per kind:
//
//   kInclude        name = directive argument verbatim, e.g. "<ap_int.h>"
//   kPragma         name = directive body, e.g. "HLS PIPELINE II=1"
//   kFunctionDef    name = function name; type_text = return type;
//                   children = [ParamList, CompoundStmt]
//   kParam          name = parameter name; type_text = type verbatim,
//                   references included, e.g. "ap_uint<8>&"
//   kDeclaration    name = declarator incl. array dims, e.g. "rom[2048]";
//                   type_text = specifiers verbatim, e.g.
//                   "static const ap_uint<8>"; children = [initializer]?
//   kAssignment     name = operator ("=", "+=", ...); children = [lhs, rhs]
//   kIfStmt         children = [condition, then-branch, else-branch?]
//   kForStmt        children = [init, condition, step, body]
//   kWhileStmt      children = [condition, body]
//   kSwitchStmt     children = [selector, CaseClause...]
//   kCaseClause     name = label text or "default"; type_text = "break" when
//                   the clause ends with a break statement
//   kReturnStmt     children = [expression]?
//   kExprStmt       children = [expression]
//   kCallExpr       children = [callee, argument...]
//   kBinaryExpr     name = operator; children = [lhs, rhs]
//   kUnaryExpr      name = operator; type_text = "postfix" for i++ / i--;
//                   children = [operand]
//   kArraySubscript children = [base, index]
//   kIdentifier     name = identifier text (possibly scoped, "hls::min")
//   kLiteral        name = literal text verbatim, including quotes or a whole
//                   brace initializer "{...}"
//   kComment        name = comment text verbatim, including // or /* */
//   kTypeName       type_text = type text verbatim (template args preserved)
struct AstNode {
  NodeKind kind = NodeKind::kTranslationUnit;
  std::string name;
  std::string type_text;
  std::vector<AstNode> children;
  SourceSpan span;
  int node_id = 0;

  const AstNode* FindChild(NodeKind kind) const;
  std::size_t CountNodes() const;
};

// Structural equality: kind, name, type_text and child order; spans and
// node ids are ignored.
bool StructurallyEqual(const AstNode& a, const AstNode& b);

// Pre-order visit of `node` and all descendants.
void ForEachNode(const AstNode& node,
                 const std::function<void(const AstNode&)>& visit);

// JSON dump of the tree: {kind, name?, type_text?, span, node_id, children}.
std::string ToJson(const AstNode& node);

}  // namespace astkit

#endif  // ASTKIT_AST_H_
