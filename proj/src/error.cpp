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

#include "astkit/error.h"

namespace astkit {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnterminatedComment:
      return "UnterminatedComment";
    case ErrorCode::kUnterminatedString:
      return "UnterminatedString";
    case ErrorCode::kIllegalCharacter:
      return "IllegalCharacter";
    case ErrorCode::kSyntaxError:
      return "SyntaxError";
    case ErrorCode::kUnsupportedConstruct:
      return "UnsupportedConstruct";
    case ErrorCode::kFunctionNotFound:
      return "FunctionNotFound";
    case ErrorCode::kAmbiguousFunction:
      return "AmbiguousFunction";
    case ErrorCode::kInvalidConfig:
      return "InvalidConfig";
    case ErrorCode::kNotAFunction:
      return "NotAFunction";
    case ErrorCode::kEmptySection:
      return "EmptySection";
    case ErrorCode::kDuplicateId:
      return "DuplicateId";
    case ErrorCode::kEmptyInput:
      return "EmptyInput";
    case ErrorCode::kTemplateNotFound:
      return "TemplateNotFound";
    case ErrorCode::kMissingCodeSection:
      return "MissingCodeSection";
    case ErrorCode::kMissingInstructionSection:
      return "MissingInstructionSection";
    case ErrorCode::kEmptySequence:
      return "EmptySequence";
    case ErrorCode::kInsufficientAttempts:
      return "InsufficientAttempts";
    case ErrorCode::kInvalidBoundaries:
      return "InvalidBoundaries";
    case ErrorCode::kMalformedLogLine:
      return "MalformedLogLine";
    case ErrorCode::kTimeout:
      return "Timeout";
    case ErrorCode::kSpawnFailure:
      return "SpawnFailure";
    case ErrorCode::kWorkdirError:
      return "WorkdirError";
    case ErrorCode::kHttpError:
      return "HttpError";
    case ErrorCode::kRateLimited:
      return "RateLimited";
    case ErrorCode::kMalformedResponse:
      return "MalformedResponse";
    case ErrorCode::kIoError:
      return "IoError";
  }
  return "UnknownError";
}

}  // namespace astkit
