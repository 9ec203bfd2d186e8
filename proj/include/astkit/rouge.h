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

#ifndef ASTKIT_ROUGE_H_
#define ASTKIT_ROUGE_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace astkit {

// Word tokens: lowercased, split on runs of non-alphanumeric characters.
std::vector<std::string> RougeTokenize(std::string_view text);

// Longest common subsequence length, O(|a|*|b|) time, O(min) space.
std::size_t LcsLength(std::span<const std::string> a,
                      std::span<const std::string> b);

// ROUGE-L F-measure:
//   P = LCS/|candidate|, R = LCS/|reference|,
//   score = (1+beta^2)*P*R / (R + beta^2*P), 0 when LCS = 0.
// Computed as (1+beta^2)*LCS / (|candidate| + beta^2*|reference|), which is
// the same quantity with a single rounding step; at beta = 1 the result is
// the correctly rounded rational 2*LCS/(|candidate|+|reference|), and the
// score is exactly symmetric in its arguments.
// Throws kEmptySequence when either side has zero tokens.
double RougeL(std::span<const std::string> candidate,
              std::span<const std::string> reference, double beta = 1.0);

double RougeL(std::string_view candidate, std::string_view reference,
              double beta = 1.0);

using TokenLists = std::vector<std::vector<std::string>>;

// For each candidate, the maximum RougeL(candidate, reference) over all
// references. This is the leakage-screening hot loop: |candidates| x
// |references| LCS tables. The default entry point runs the candidate loop
// under OpenMP; the serial variant is the reference implementation kept for
// testing and benchmarking. Both produce identical output for identical
// input. Candidates or references with zero tokens score 0 here (batch
// callers already dropped or flagged them).
std::vector<double> MaxRougeScores(const TokenLists& candidates,
                                   const TokenLists& references,
                                   double beta = 1.0);
std::vector<double> MaxRougeScoresSerial(const TokenLists& candidates,
                                         const TokenLists& references,
                                         double beta = 1.0);

}  // namespace astkit

#endif  // ASTKIT_ROUGE_H_
