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

#include "astkit/serialize.h"

#include <utility>
#include <vector>

#include "astkit/error.h"
#include "src/internal/ast_text.h"

namespace astkit {
namespace {

using internal::ExprText;

// Drops leading storage/cv qualifier words: Listing 2 serializes the
// "static const ap_uint<8>" ROM declaration as "VarTyp: ap_uint<8>".
std::string StripQualifiers(std::string_view type_text) {
  std::string_view rest = type_text;
  while (true) {
    bool stripped = false;
    for (std::string_view qual : {"static ", "const ", "volatile "}) {
      if (rest.substr(0, qual.size()) == qual) {
        rest.remove_prefix(qual.size());
        stripped = true;
      }
    }
    if (!stripped) break;
  }
  return std::string(rest);
}

// Listing 2 lists "ap_uint<8>& v_data" as parameter type "ap_uint<8>".
std::string StripReference(std::string_view type_text) {
  while (!type_text.empty() && type_text.back() == '&') {
    type_text.remove_suffix(1);
  }
  return std::string(type_text);
}

class Emitter {
 public:
  explicit Emitter(bool indent) : indent_(indent) {}

  std::vector<std::string> TakeLines() { return std::move(lines_); }

  void EmitFunction(const AstNode& fn) {
    std::string line = "FuncName: " + fn.name + ", Params:";
    const AstNode* params = fn.FindChild(NodeKind::kParamList);
    if (params != nullptr) {
      for (std::size_t i = 0; i < params->children.size(); ++i) {
        line += i == 0 ? " " : ", ";
        line += StripReference(params->children[i].type_text);
      }
    }
    Line(0, std::move(line));
    if (const AstNode* body = fn.FindChild(NodeKind::kCompoundStmt)) {
      EmitStatement(*body, 1);
    }
  }

 private:
  void Line(int depth, std::string text) {
    lines_.push_back(indent_ ? std::string(2 * depth, ' ') + text
                             : std::move(text));
  }

  void EmitStatement(const AstNode& node, int depth) {
    switch (node.kind) {
      case NodeKind::kCompoundStmt:
      case NodeKind::kExprStmt:
        for (const AstNode& child : node.children) {
          EmitStatement(child, depth);
        }
        break;
      case NodeKind::kDeclaration:
        Line(depth, "VarTyp: " + StripQualifiers(node.type_text));
        break;
      case NodeKind::kAssignment:
        Line(depth, "Asgnmnt: " + ExprText(node));
        break;
      case NodeKind::kIfStmt:
        Line(depth, "IfStmt: Contn: (" + ExprText(node.children[0]) + ")");
        Line(depth, "Then:");
        EmitStatement(node.children[1], depth + 1);
        if (node.children.size() > 2) {
          Line(depth, "Else:");
          EmitStatement(node.children[2], depth + 1);
        }
        break;
      case NodeKind::kForStmt:
        Line(depth, "ForStmt: Contn: (" + ExprText(node.children[0]) + "; " +
                        ExprText(node.children[1]) + "; " +
                        ExprText(node.children[2]) + ")");
        Line(depth, "Body:");
        EmitStatement(node.children[3], depth + 1);
        break;
      case NodeKind::kWhileStmt:
        Line(depth, "WhileStmt: Contn: (" + ExprText(node.children[0]) + ")");
        Line(depth, "Body:");
        EmitStatement(node.children[1], depth + 1);
        break;
      case NodeKind::kSwitchStmt:
        Line(depth, "SwitchStmt: Contn: (" + ExprText(node.children[0]) + ")");
        for (std::size_t i = 1; i < node.children.size(); ++i) {
          const AstNode& clause = node.children[i];
          Line(depth, "Case " + clause.name + ":");
          for (const AstNode& stmt : clause.children) {
            EmitStatement(stmt, depth + 1);
          }
        }
        break;
      case NodeKind::kReturnStmt:
        if (node.children.empty()) {
          Line(depth, "RetStmt:");
        } else {
          Line(depth, "RetStmt: " + ExprText(node.children[0]));
        }
        break;
      case NodeKind::kCallExpr:
        Line(depth, "CallStmt: " + ExprText(node));
        break;
      default:
        // Pragma, Include, Comment and stray expression nodes do not
        // serialize.
        break;
    }
  }

  bool indent_;
  std::vector<std::string> lines_;
};

}  // namespace

SerializedAst Serialize(const AstNode& function,
                        const SerializeOptions& options) {
  if (function.kind != NodeKind::kFunctionDef) {
    throw Error(ErrorCode::kNotAFunction,
                "cannot serialize a " +
                    std::string(NodeKindName(function.kind)) + " node",
                function.span);
  }
  Emitter emitter(options.indent);
  emitter.EmitFunction(function);
  std::vector<std::string> lines = emitter.TakeLines();
  SerializedAst out;
  out.line_count = static_cast<int>(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i > 0) out.text += '\n';
    out.text += lines[i];
  }
  return out;
}

TrainingRecord AssembleTrainingRecord(std::string instruction,
                                      SerializedAst ast, std::string code,
                                      std::string id, std::string source_id) {
  auto require = [](const std::string& value, std::string_view what) {
    if (value.empty()) {
      throw Error(ErrorCode::kEmptySection,
                  "training record field '" + std::string(what) +
                      "' is empty");
    }
  };
  require(instruction, "instruction");
  require(ast.text, "ast");
  require(code, "code");
  require(id, "id");
  require(source_id, "source_id");
  TrainingRecord record;
  record.id = std::move(id);
  record.instruction = std::move(instruction);
  record.ast = std::move(ast);
  record.code = std::move(code);
  record.source_id = std::move(source_id);
  return record;
}

std::string RenderInput(const TrainingRecord& record) {
  return "### Instruction\n" + record.instruction + "\n\n### AST\n" +
         record.ast.text + "\n";
}

std::string Render(const TrainingRecord& record) {
  return RenderInput(record) + "\n### Code\n" + record.code + "\n";
}

}  // namespace astkit
