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

#ifndef ASTKIT_SERIALIZE_H_
#define ASTKIT_SERIALIZE_H_

#include <string>
#include <string_view>

#include "astkit/ast.h"

namespace astkit {

// Compact line-based rendering of an optimized function subtree. `text` holds
// LF-separated tag lines without a trailing newline and without trailing
// whitespace on any line.
struct SerializedAst {
  std::string text;
  int line_count = 0;
};

struct SerializeOptions {
  // Indent nested lines by two spaces per level, for human reading. Off for
  // training records: nesting is expressed purely by line order.
  bool indent = false;
};

// Renders `function` (a FunctionDef subtree, or the optimizer's output for
// one) to tag lines, in pre-order:
//
//   FuncName: <name>, Params: <types, comma separated, references stripped>
//   VarTyp: <declared type, storage qualifiers stripped>
//   Asgnmnt: <lhs> <op> <rhs>
//   IfStmt: Contn: (<condition>)   then  Then: / Else: blocks
//   ForStmt: Contn: (<init>; <cond>; <step>)   then a Body: block
//   WhileStmt: Contn: (<condition>)            then a Body: block
//   SwitchStmt: Contn: (<selector>)  with  Case <label>: sub-blocks
//   RetStmt: <expression>
//   CallStmt: <call>
//
// Expression text is rendered canonically (single spaces around binary and
// assignment operators, none inside subscripts or calls), so surface syntax
// like rom[v_addr] is preserved and `for(i=0;i<4;i++)` serializes as
// `(i = 0; i < 4; i++)`. Pragma, Include and Comment nodes produce no lines.
// Throws kNotAFunction when `function` is not a FunctionDef.
SerializedAst Serialize(const AstNode& function,
                        const SerializeOptions& options = {});

// One fine-tuning sample: instruction + serialized AST form the model input,
// the HLS-C code is the target.
struct TrainingRecord {
  std::string id;
  std::string instruction;
  SerializedAst ast;
  std::string code;
  std::string source_id;
};

// Throws kEmptySection when instruction, ast or code is empty or when id /
// source_id is missing. Uniqueness of ids is enforced per dataset by the
// dataset writer.
TrainingRecord AssembleTrainingRecord(std::string instruction,
                                      SerializedAst ast, std::string code,
                                      std::string id, std::string source_id);

// Model-input text: "### Instruction" section followed by "### AST" section.
std::string RenderInput(const TrainingRecord& record);

// Full training text: the input sections plus a "### Code" target section.
std::string Render(const TrainingRecord& record);

}  // namespace astkit

#endif  // ASTKIT_SERIALIZE_H_
