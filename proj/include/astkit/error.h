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

#ifndef ASTKIT_ERROR_H_
#define ASTKIT_ERROR_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "astkit/source.h"

namespace astkit {

enum class ErrorCode {
  // Lexing.
  kUnterminatedComment,
  kUnterminatedString,
  kIllegalCharacter,
  // Parsing.
  kSyntaxError,
  kUnsupportedConstruct,
  // Function lookup.
  kFunctionNotFound,
  kAmbiguousFunction,
  // Optimization.
  kInvalidConfig,
  // Serialization / records.
  kNotAFunction,
  kEmptySection,
  kDuplicateId,
  // Dataset pipeline.
  kEmptyInput,
  kTemplateNotFound,
  kMissingCodeSection,
  kMissingInstructionSection,
  kEmptySequence,
  // Evaluation.
  kInsufficientAttempts,
  kInvalidBoundaries,
  kMalformedLogLine,
  // Tool adapters.
  kTimeout,
  kSpawnFailure,
  kWorkdirError,
  kHttpError,
  kRateLimited,
  kMalformedResponse,
  // Generic I/O.
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every domain failure in the toolkit is thrown as one of these; the CLI maps
// them to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  Error(ErrorCode code, std::string message, SourceSpan span)
      : std::runtime_error(std::string(ErrorCodeName(code)) + " at " +
                           ToString(span) + ": " + message),
        code_(code),
        span_(span) {}

  ErrorCode code() const { return code_; }
  const std::optional<SourceSpan>& span() const { return span_; }

 private:
  ErrorCode code_;
  std::optional<SourceSpan> span_;
};

}  // namespace astkit

#endif  // ASTKIT_ERROR_H_
