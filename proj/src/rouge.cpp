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

#include "astkit/rouge.h"

#include <algorithm>
#include <cctype>

#include "astkit/error.h"

namespace astkit {

std::vector<std::string> RougeTokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      current.push_back(static_cast<char>(
          std::tolower(static_cast<unsigned char>(c))));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::size_t LcsLength(std::span<const std::string> a,
                      std::span<const std::string> b) {
  // Keep the shorter sequence along the row for O(min(|a|,|b|)) space.
  if (b.size() > a.size()) std::swap(a, b);
  if (b.empty()) return 0;
  std::vector<std::size_t> row(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = 0;  // row[j-1] from the previous iteration of i
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t above = row[j];
      row[j] = a[i - 1] == b[j - 1] ? diagonal + 1
                                    : std::max(above, row[j - 1]);
      diagonal = above;
    }
  }
  return row[b.size()];
}

namespace {

double RougeLFromLcs(std::size_t lcs, std::size_t candidate_len,
                     std::size_t reference_len, double beta) {
  if (lcs == 0) return 0.0;
  double beta_sq = beta * beta;
  return (1.0 + beta_sq) * static_cast<double>(lcs) /
         (static_cast<double>(candidate_len) +
          beta_sq * static_cast<double>(reference_len));
}

}  // namespace

double RougeL(std::span<const std::string> candidate,
              std::span<const std::string> reference, double beta) {
  if (candidate.empty() || reference.empty()) {
    throw Error(ErrorCode::kEmptySequence,
                candidate.empty() ? "candidate tokenizes to zero tokens"
                                  : "reference tokenizes to zero tokens");
  }
  return RougeLFromLcs(LcsLength(candidate, reference), candidate.size(),
                       reference.size(), beta);
}

double RougeL(std::string_view candidate, std::string_view reference,
              double beta) {
  std::vector<std::string> c = RougeTokenize(candidate);
  std::vector<std::string> r = RougeTokenize(reference);
  return RougeL(std::span<const std::string>(c),
                std::span<const std::string>(r), beta);
}

std::vector<double> MaxRougeScoresSerial(const TokenLists& candidates,
                                         const TokenLists& references,
                                         double beta) {
  std::vector<double> scores(candidates.size(), 0.0);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const std::vector<std::string>& candidate = candidates[i];
    if (candidate.empty()) continue;
    double best = 0.0;
    for (const std::vector<std::string>& reference : references) {
      if (reference.empty()) continue;
      std::size_t lcs = LcsLength(candidate, reference);
      best = std::max(best, RougeLFromLcs(lcs, candidate.size(),
                                          reference.size(), beta));
    }
    scores[i] = best;
  }
  return scores;
}

std::vector<double> MaxRougeScores(const TokenLists& candidates,
                                   const TokenLists& references, double beta) {
  std::vector<double> scores(candidates.size(), 0.0);
  const std::int64_t n = static_cast<std::int64_t>(candidates.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    const std::vector<std::string>& candidate = candidates[i];
    if (candidate.empty()) continue;
    double best = 0.0;
    for (const std::vector<std::string>& reference : references) {
      if (reference.empty()) continue;
      std::size_t lcs = LcsLength(candidate, reference);
      best = std::max(best, RougeLFromLcs(lcs, candidate.size(),
                                          reference.size(), beta));
    }
    scores[i] = best;
  }
  return scores;
}

}  // namespace astkit
