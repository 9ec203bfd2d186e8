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

#include <algorithm>
#include <string>
#include <string_view>

#include "astkit/parser.h"
#include "src/internal/ast_text.h"

namespace astkit {
namespace internal {
namespace {

// Parenthesizes operands whose printed form would otherwise rebind under
// precedence when reparsed. Identifiers, literals, calls and subscripts bind
// tightest and never need parens.
bool NeedsParens(const AstNode& operand) {
  switch (operand.kind) {
    case NodeKind::kBinaryExpr:
    case NodeKind::kAssignment:
    case NodeKind::kUnaryExpr:
      return true;
    default:
      return false;
  }
}

std::string OperandText(const AstNode& operand) {
  std::string text = ExprText(operand);
  if (NeedsParens(operand)) return "(" + text + ")";
  return text;
}

}  // namespace

std::string ExprText(const AstNode& node) {
  switch (node.kind) {
    case NodeKind::kIdentifier:
    case NodeKind::kLiteral:
    case NodeKind::kComment:
      return node.name;
    case NodeKind::kBinaryExpr:
      return OperandText(node.children[0]) + " " + node.name + " " +
             OperandText(node.children[1]);
    case NodeKind::kUnaryExpr:
      if (node.type_text == "postfix") {
        return OperandText(node.children[0]) + node.name;
      }
      return node.name + OperandText(node.children[0]);
    case NodeKind::kArraySubscript:
      return OperandText(node.children[0]) + "[" +
             ExprText(node.children[1]) + "]";
    case NodeKind::kCallExpr: {
      std::string text = OperandText(node.children[0]) + "(";
      for (std::size_t i = 1; i < node.children.size(); ++i) {
        if (i > 1) text += ", ";
        text += ExprText(node.children[i]);
      }
      return text + ")";
    }
    case NodeKind::kAssignment:
      return ExprText(node.children[0]) + " " + node.name + " " +
             ExprText(node.children[1]);
    case NodeKind::kDeclaration: {
      std::string text = node.type_text + " " + node.name;
      if (!node.children.empty()) text += " = " + ExprText(node.children[0]);
      return text;
    }
    case NodeKind::kParam:
      return node.type_text + " " + node.name;
    default:
      return node.name;
  }
}

}  // namespace internal

namespace {

using internal::ExprText;

std::string Pad(int indent) { return std::string(2 * indent, ' '); }

std::string StmtText(const AstNode& node, int indent);

std::string BlockText(const AstNode& block, int indent) {
  std::string out = "{\n";
  for (const AstNode& child : block.children) {
    out += StmtText(child, indent + 1);
    out += '\n';
  }
  out += Pad(indent) + "}";
  return out;
}

// A control-statement branch: blocks keep their braces, a single statement
// stays on the same line.
std::string BranchText(const AstNode& branch, int indent) {
  if (branch.kind == NodeKind::kCompoundStmt) return BlockText(branch, indent);
  std::string text = StmtText(branch, indent);
  std::string_view trimmed = text;
  trimmed.remove_prefix(std::min(trimmed.size(), Pad(indent).size()));
  return std::string(trimmed);
}

std::string ParamsText(const AstNode& param_list) {
  std::string out;
  for (std::size_t i = 0; i < param_list.children.size(); ++i) {
    if (i > 0) out += ", ";
    out += ExprText(param_list.children[i]);
  }
  return out;
}

std::string StmtText(const AstNode& node, int indent) {
  const std::string pad = Pad(indent);
  switch (node.kind) {
    case NodeKind::kInclude:
      return pad + "#include " + node.name;
    case NodeKind::kPragma:
      return pad + "#pragma " + node.name;
    case NodeKind::kComment:
      return pad + node.name;
    case NodeKind::kFunctionDef: {
      const AstNode& params = node.children[0];
      const AstNode& body = node.children[1];
      return pad + node.type_text + " " + node.name + "(" +
             ParamsText(params) + ") " + BlockText(body, indent);
    }
    case NodeKind::kCompoundStmt:
      return pad + BlockText(node, indent);
    case NodeKind::kIfStmt: {
      std::string out = pad + "if (" + ExprText(node.children[0]) + ") " +
                        BranchText(node.children[1], indent);
      if (node.children.size() > 2) {
        out += " else " + BranchText(node.children[2], indent);
      }
      return out;
    }
    case NodeKind::kForStmt:
      return pad + "for (" + ExprText(node.children[0]) + "; " +
             ExprText(node.children[1]) + "; " + ExprText(node.children[2]) +
             ") " + BranchText(node.children[3], indent);
    case NodeKind::kWhileStmt:
      return pad + "while (" + ExprText(node.children[0]) + ") " +
             BranchText(node.children[1], indent);
    case NodeKind::kSwitchStmt: {
      std::string out = pad + "switch (" + ExprText(node.children[0]) + ") {\n";
      for (std::size_t i = 1; i < node.children.size(); ++i) {
        const AstNode& clause = node.children[i];
        out += Pad(indent + 1);
        out += clause.name == "default" ? "default:" : "case " + clause.name +
                                                           ":";
        out += '\n';
        for (const AstNode& stmt : clause.children) {
          out += StmtText(stmt, indent + 2);
          out += '\n';
        }
        if (clause.type_text == "break") {
          out += Pad(indent + 2) + "break;\n";
        }
      }
      out += pad + "}";
      return out;
    }
    case NodeKind::kReturnStmt:
      if (node.children.empty()) return pad + "return;";
      return pad + "return " + ExprText(node.children[0]) + ";";
    case NodeKind::kDeclaration:
    case NodeKind::kAssignment:
      return pad + ExprText(node) + ";";
    case NodeKind::kExprStmt:
      return pad + ExprText(node.children[0]) + ";";
    case NodeKind::kParamList:
      return pad + "(" + ParamsText(node) + ")";
    default:
      // Expression nodes promoted to statement position by the optimizer.
      return pad + ExprText(node) + ";";
  }
}

}  // namespace

std::string PrettyPrint(const AstNode& node) {
  switch (node.kind) {
    case NodeKind::kTranslationUnit: {
      std::string out;
      for (const AstNode& child : node.children) {
        out += StmtText(child, 0);
        out += '\n';
      }
      if (!out.empty()) out.pop_back();
      return out;
    }
    case NodeKind::kIdentifier:
    case NodeKind::kLiteral:
    case NodeKind::kBinaryExpr:
    case NodeKind::kUnaryExpr:
    case NodeKind::kArraySubscript:
    case NodeKind::kCallExpr:
    case NodeKind::kParam:
      return ExprText(node);
    default:
      return StmtText(node, 0);
  }
}

}  // namespace astkit
