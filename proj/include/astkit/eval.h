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

#ifndef ASTKIT_EVAL_H_
#define ASTKIT_EVAL_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace astkit {

// One (problem, attempt) result. functional_ok is not independent: it must
// equal synth_ok && constraints_total > 0 && constraints_passed ==
// constraints_total.
struct AttemptOutcome {
  std::string problem_id;
  int attempt_idx = 1;  // 1-based
  bool synth_ok = false;
  int constraints_total = 0;
  int constraints_passed = 0;
  bool functional_ok = false;
};

// Builds an outcome with functional_ok derived from the other fields.
AttemptOutcome MakeAttemptOutcome(std::string problem_id, int attempt_idx,
                                  bool synth_ok, int constraints_total,
                                  int constraints_passed);

// Throws kMalformedResponse when the invariants are violated.
void Validate(const AttemptOutcome& outcome);

enum class SuccessPredicate { kSynth, kFunctional };

// Exact ratio kept unrounded until rendering.
struct Ratio {
  long long num = 0;
  long long den = 1;

  double Value() const;
  // Percentage with two decimals, half-up, e.g. 145/156 -> "92.95%".
  std::string Percent() const;

  friend bool operator==(const Ratio&, const Ratio&) = default;
};

// Fraction of problems where at least one of the first k attempts (by
// attempt_idx) satisfies the predicate. Every problem must have at least k
// attempts; otherwise kInsufficientAttempts.
Ratio PassAtK(std::span<const AttemptOutcome> outcomes, int k,
              SuccessPredicate predicate);

// The combinatorial estimator 1 - C(n-c, k)/C(n, k) averaged over problems,
// offered as an alternative behind the CLI --unbiased flag. Returned as a
// double since the average is not a small rational.
double PassAtKUnbiased(std::span<const AttemptOutcome> outcomes, int k,
                       SuccessPredicate predicate);

enum class Tier { kT1, kT2, kT3 };

std::string_view TierName(Tier tier);

struct ProblemMeta {
  std::string problem_id;
  long long reference_verilog_chars = 0;
  std::optional<Tier> tier;
};

// Assigns difficulty tiers by reference-Verilog length. With explicit
// boundaries (b1, b2): chars <= b1 -> T1, chars <= b2 -> T2, else T3
// (inclusive on the lower tier); b1 >= b2 raises kInvalidBoundaries. Without
// boundaries, b1/b2 default to the 33.3rd/66.7th percentiles of the corpus
// (linear interpolation between order statistics).
void ClassifyTiers(std::vector<ProblemMeta>& metas,
                   std::optional<std::pair<double, double>> boundaries = {});

// Per-model, per-scope metric table. Scope "overall" plus one per tier.
struct MetricReport {
  struct Cell {
    Ratio synth;
    Ratio pass;
  };
  struct ModelSection {
    // scope name ("overall", "T1", "T2", "T3") -> k -> cell
    std::map<std::string, std::map<int, Cell>> scopes;
    // problem_id -> k -> {synth ok, pass ok}: the Tables III/IV-style matrix
    std::map<std::string, std::map<int, std::pair<bool, bool>>> matrix;
  };
  std::map<std::string, ModelSection> models;
  std::map<std::string, int> problems_per_scope;
  std::vector<int> k_set;
};

// Aggregates synth@k / pass@k per model, overall and per tier, for each k.
// `metas` must cover every problem id appearing in `outcomes` and already
// carry tiers. include_matrix adds the per-benchmark pass/fail matrix.
MetricReport AggregateReport(
    const std::map<std::string, std::vector<AttemptOutcome>>& outcomes,
    const std::vector<ProblemMeta>& metas, std::span<const int> k_set,
    bool include_matrix = false);

std::string ToJson(const MetricReport& report);
std::string ToTable(const MetricReport& report);

// Parses the constrained-simulation line protocol: lines matching
// "CONSTRAINT <integer> PASS" or "CONSTRAINT <integer> FAIL". Duplicate ids
// take the last occurrence. Returns (constraints_total, constraints_passed).
// Other lines are ignored unless strict, in which case any non-conforming
// non-blank line raises kMalformedLogLine with its line number.
std::pair<int, int> ParseSimLog(std::string_view log_text, bool strict = false);

}  // namespace astkit

#endif  // ASTKIT_EVAL_H_
