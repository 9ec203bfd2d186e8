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

#include "astkit/eval.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

#include "astkit/error.h"
#include "nlohmann/json.hpp"

namespace astkit {

AttemptOutcome MakeAttemptOutcome(std::string problem_id, int attempt_idx,
                                  bool synth_ok, int constraints_total,
                                  int constraints_passed) {
  AttemptOutcome outcome;
  outcome.problem_id = std::move(problem_id);
  outcome.attempt_idx = attempt_idx;
  outcome.synth_ok = synth_ok;
  outcome.constraints_total = constraints_total;
  outcome.constraints_passed = constraints_passed;
  outcome.functional_ok = synth_ok && constraints_total > 0 &&
                          constraints_passed == constraints_total;
  Validate(outcome);
  return outcome;
}

void Validate(const AttemptOutcome& outcome) {
  if (outcome.problem_id.empty()) {
    throw Error(ErrorCode::kMalformedResponse, "outcome without problem_id");
  }
  if (outcome.attempt_idx < 1) {
    throw Error(ErrorCode::kMalformedResponse,
                "attempt_idx must be >= 1 for problem " + outcome.problem_id);
  }
  if (outcome.constraints_total < 0 || outcome.constraints_passed < 0 ||
      outcome.constraints_passed > outcome.constraints_total) {
    throw Error(ErrorCode::kMalformedResponse,
                "constraint counts out of range for problem " +
                    outcome.problem_id);
  }
  bool expected_functional = outcome.synth_ok &&
                             outcome.constraints_total > 0 &&
                             outcome.constraints_passed ==
                                 outcome.constraints_total;
  if (outcome.functional_ok != expected_functional) {
    throw Error(ErrorCode::kMalformedResponse,
                "functional_ok is inconsistent with synth/constraint fields "
                "for problem " +
                    outcome.problem_id);
  }
}

double Ratio::Value() const {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::string Ratio::Percent() const {
  // Hundredths of a percent, computed exactly and rounded half-up.
  long long scaled = num * 10000;
  long long whole = scaled / den;
  long long rem = scaled % den;
  if (2 * rem >= den) ++whole;
  std::ostringstream os;
  os << whole / 100 << '.' << std::setw(2) << std::setfill('0') << whole % 100
     << '%';
  return os.str();
}

namespace {

bool Satisfies(const AttemptOutcome& outcome, SuccessPredicate predicate) {
  return predicate == SuccessPredicate::kSynth ? outcome.synth_ok
                                               : outcome.functional_ok;
}

// problem_id -> attempts sorted by attempt_idx.
std::map<std::string, std::vector<const AttemptOutcome*>> GroupByProblem(
    std::span<const AttemptOutcome> outcomes) {
  std::map<std::string, std::vector<const AttemptOutcome*>> grouped;
  for (const AttemptOutcome& outcome : outcomes) {
    Validate(outcome);
    grouped[outcome.problem_id].push_back(&outcome);
  }
  for (auto& [id, attempts] : grouped) {
    std::stable_sort(attempts.begin(), attempts.end(),
                     [](const AttemptOutcome* a, const AttemptOutcome* b) {
                       return a->attempt_idx < b->attempt_idx;
                     });
  }
  return grouped;
}

bool AnyOfFirstK(const std::vector<const AttemptOutcome*>& attempts, int k,
                 SuccessPredicate predicate) {
  for (int i = 0; i < k; ++i) {
    if (Satisfies(*attempts[static_cast<std::size_t>(i)], predicate)) {
      return true;
    }
  }
  return false;
}

}  // namespace

Ratio PassAtK(std::span<const AttemptOutcome> outcomes, int k,
              SuccessPredicate predicate) {
  if (k < 1) {
    throw Error(ErrorCode::kInsufficientAttempts, "k must be >= 1");
  }
  if (outcomes.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no outcomes to score");
  }
  auto grouped = GroupByProblem(outcomes);
  long long successes = 0;
  for (const auto& [id, attempts] : grouped) {
    if (attempts.size() < static_cast<std::size_t>(k)) {
      throw Error(ErrorCode::kInsufficientAttempts,
                  "problem " + id + " has " +
                      std::to_string(attempts.size()) +
                      " attempts, need k=" + std::to_string(k));
    }
    if (AnyOfFirstK(attempts, k, predicate)) ++successes;
  }
  return Ratio{successes, static_cast<long long>(grouped.size())};
}

double PassAtKUnbiased(std::span<const AttemptOutcome> outcomes, int k,
                       SuccessPredicate predicate) {
  if (k < 1) {
    throw Error(ErrorCode::kInsufficientAttempts, "k must be >= 1");
  }
  if (outcomes.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no outcomes to score");
  }
  auto grouped = GroupByProblem(outcomes);
  double sum = 0.0;
  for (const auto& [id, attempts] : grouped) {
    const long long n = static_cast<long long>(attempts.size());
    if (n < k) {
      throw Error(ErrorCode::kInsufficientAttempts,
                  "problem " + id + " has " + std::to_string(n) +
                      " attempts, need k=" + std::to_string(k));
    }
    long long correct = 0;
    for (const AttemptOutcome* a : attempts) {
      if (Satisfies(*a, predicate)) ++correct;
    }
    if (n - correct < k) {
      sum += 1.0;
      continue;
    }
    // 1 - C(n-c, k)/C(n, k) as a stable product.
    double fail_all = 1.0;
    for (long long i = 0; i < k; ++i) {
      fail_all *= static_cast<double>(n - correct - i) /
                  static_cast<double>(n - i);
    }
    sum += 1.0 - fail_all;
  }
  return sum / static_cast<double>(grouped.size());
}

std::string_view TierName(Tier tier) {
  switch (tier) {
    case Tier::kT1:
      return "T1";
    case Tier::kT2:
      return "T2";
    case Tier::kT3:
      return "T3";
  }
  return "T?";
}

namespace {

// Linear interpolation between closest order statistics, 0-based ranks.
double Percentile(const std::vector<long long>& sorted, double p) {
  if (sorted.size() == 1) return static_cast<double>(sorted.front());
  double rank = p / 100.0 * static_cast<double>(sorted.size() - 1);
  std::size_t lo = static_cast<std::size_t>(rank);
  lo = std::min(lo, sorted.size() - 2);
  double frac = rank - static_cast<double>(lo);
  return static_cast<double>(sorted[lo]) +
         frac * static_cast<double>(sorted[lo + 1] - sorted[lo]);
}

}  // namespace

void ClassifyTiers(std::vector<ProblemMeta>& metas,
                   std::optional<std::pair<double, double>> boundaries) {
  if (metas.empty()) return;
  double b1 = 0.0;
  double b2 = 0.0;
  if (boundaries.has_value()) {
    b1 = boundaries->first;
    b2 = boundaries->second;
    if (b1 >= b2) {
      throw Error(ErrorCode::kInvalidBoundaries,
                  "tier boundaries must satisfy b1 < b2");
    }
  } else {
    std::vector<long long> chars;
    chars.reserve(metas.size());
    for (const ProblemMeta& meta : metas) {
      chars.push_back(meta.reference_verilog_chars);
    }
    std::sort(chars.begin(), chars.end());
    b1 = Percentile(chars, 33.3);
    b2 = Percentile(chars, 66.7);
  }
  for (ProblemMeta& meta : metas) {
    double c = static_cast<double>(meta.reference_verilog_chars);
    meta.tier = c <= b1 ? Tier::kT1 : (c <= b2 ? Tier::kT2 : Tier::kT3);
  }
}

MetricReport AggregateReport(
    const std::map<std::string, std::vector<AttemptOutcome>>& outcomes,
    const std::vector<ProblemMeta>& metas, std::span<const int> k_set,
    bool include_matrix) {
  std::map<std::string, Tier> tier_of;
  for (const ProblemMeta& meta : metas) {
    if (!meta.tier.has_value()) {
      throw Error(ErrorCode::kInvalidConfig,
                  "problem " + meta.problem_id + " has no tier assigned");
    }
    tier_of[meta.problem_id] = *meta.tier;
  }

  MetricReport report;
  report.k_set.assign(k_set.begin(), k_set.end());

  // Scope membership comes from the union of problems across models.
  std::set<std::string> all_problems;
  for (const auto& [model, model_outcomes] : outcomes) {
    for (const AttemptOutcome& outcome : model_outcomes) {
      auto it = tier_of.find(outcome.problem_id);
      if (it == tier_of.end()) {
        throw Error(ErrorCode::kInvalidConfig,
                    "no problem meta for " + outcome.problem_id);
      }
      all_problems.insert(outcome.problem_id);
    }
  }
  std::map<std::string, std::set<std::string>> scope_problems;
  for (const std::string& id : all_problems) {
    scope_problems["overall"].insert(id);
    scope_problems[std::string(TierName(tier_of.at(id)))].insert(id);
  }
  for (const auto& [scope, ids] : scope_problems) {
    report.problems_per_scope[scope] = static_cast<int>(ids.size());
  }

  for (const auto& [model, model_outcomes] : outcomes) {
    MetricReport::ModelSection section;
    for (const auto& [scope, ids] : scope_problems) {
      std::vector<AttemptOutcome> scoped;
      for (const AttemptOutcome& outcome : model_outcomes) {
        if (ids.count(outcome.problem_id) > 0) scoped.push_back(outcome);
      }
      if (scoped.empty()) continue;
      for (int k : k_set) {
        MetricReport::Cell cell;
        cell.synth = PassAtK(scoped, k, SuccessPredicate::kSynth);
        cell.pass = PassAtK(scoped, k, SuccessPredicate::kFunctional);
        section.scopes[scope][k] = cell;
      }
    }
    if (include_matrix) {
      auto grouped = GroupByProblem(model_outcomes);
      for (const auto& [id, attempts] : grouped) {
        for (int k : k_set) {
          if (attempts.size() < static_cast<std::size_t>(k)) {
            throw Error(ErrorCode::kInsufficientAttempts,
                        "problem " + id + " has " +
                            std::to_string(attempts.size()) +
                            " attempts, need k=" + std::to_string(k));
          }
          section.matrix[id][k] = {
              AnyOfFirstK(attempts, k, SuccessPredicate::kSynth),
              AnyOfFirstK(attempts, k, SuccessPredicate::kFunctional)};
        }
      }
    }
    report.models[model] = std::move(section);
  }
  return report;
}

std::string ToJson(const MetricReport& report) {
  nlohmann::ordered_json j;
  j["k_set"] = report.k_set;
  j["problems_per_scope"] = report.problems_per_scope;
  nlohmann::ordered_json models = nlohmann::ordered_json::object();
  for (const auto& [model, section] : report.models) {
    nlohmann::ordered_json scopes = nlohmann::ordered_json::object();
    for (const auto& [scope, by_k] : section.scopes) {
      nlohmann::ordered_json cells = nlohmann::ordered_json::object();
      for (const auto& [k, cell] : by_k) {
        cells[std::to_string(k)] = {
            {"synth",
             {{"num", cell.synth.num},
              {"den", cell.synth.den},
              {"percent", cell.synth.Percent()}}},
            {"pass",
             {{"num", cell.pass.num},
              {"den", cell.pass.den},
              {"percent", cell.pass.Percent()}}}};
      }
      scopes[scope] = std::move(cells);
    }
    nlohmann::ordered_json entry;
    entry["scopes"] = std::move(scopes);
    if (!section.matrix.empty()) {
      nlohmann::ordered_json matrix = nlohmann::ordered_json::object();
      for (const auto& [id, by_k] : section.matrix) {
        nlohmann::ordered_json row = nlohmann::ordered_json::object();
        for (const auto& [k, flags] : by_k) {
          row[std::to_string(k)] = {{"synth", flags.first},
                                    {"pass", flags.second}};
        }
        matrix[id] = std::move(row);
      }
      entry["matrix"] = std::move(matrix);
    }
    models[model] = std::move(entry);
  }
  j["models"] = std::move(models);
  return j.dump(2);
}

std::string ToTable(const MetricReport& report) {
  std::ostringstream os;
  for (const auto& [model, section] : report.models) {
    os << "Model: " << model << '\n';
    os << std::left << std::setw(10) << "Scope" << std::right << std::setw(6)
       << "N";
    for (int k : report.k_set) {
      os << std::setw(10) << ("Synth@" + std::to_string(k)) << std::setw(10)
         << ("Pass@" + std::to_string(k));
    }
    os << '\n';
    for (const auto& [scope, by_k] : section.scopes) {
      os << std::left << std::setw(10) << scope << std::right << std::setw(6)
         << report.problems_per_scope.at(scope);
      for (int k : report.k_set) {
        auto it = by_k.find(k);
        if (it == by_k.end()) {
          os << std::setw(10) << "-" << std::setw(10) << "-";
        } else {
          os << std::setw(10) << it->second.synth.Percent() << std::setw(10)
             << it->second.pass.Percent();
        }
      }
      os << '\n';
    }
    if (!section.matrix.empty()) {
      os << "Benchmark matrix (synth/pass):\n";
      for (const auto& [id, by_k] : section.matrix) {
        os << "  " << std::left << std::setw(24) << id << std::right;
        for (int k : report.k_set) {
          const auto& flags = by_k.at(k);
          os << "  @" << k << ":" << (flags.first ? "S+" : "S-")
             << (flags.second ? "P+" : "P-");
        }
        os << '\n';
      }
    }
    os << '\n';
  }
  return os.str();
}

std::pair<int, int> ParseSimLog(std::string_view log_text, bool strict) {
  std::map<long long, bool> last_status;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= log_text.size()) {
    std::size_t eol = log_text.find('\n', pos);
    std::string_view line = eol == std::string_view::npos
                                ? log_text.substr(pos)
                                : log_text.substr(pos, eol - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::istringstream fields{std::string(line)};
    std::string head;
    std::string id_text;
    std::string status;
    std::string extra;
    bool parsed = false;
    if (fields >> head && head == "CONSTRAINT" && fields >> id_text &&
        fields >> status && !(fields >> extra) &&
        (status == "PASS" || status == "FAIL") &&
        !id_text.empty() &&
        std::all_of(id_text.begin(), id_text.end(), [](unsigned char c) {
          return std::isdigit(c) != 0;
        })) {
      last_status[std::stoll(id_text)] = status == "PASS";
      parsed = true;
    }
    if (!parsed && strict) {
      bool blank = std::all_of(line.begin(), line.end(), [](unsigned char c) {
        return std::isspace(c) != 0;
      });
      if (!blank) {
        throw Error(ErrorCode::kMalformedLogLine,
                    "line " + std::to_string(line_no) +
                        " does not match 'CONSTRAINT <id> PASS|FAIL': " +
                        std::string(line));
      }
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  int total = static_cast<int>(last_status.size());
  int passed = 0;
  for (const auto& [id, ok] : last_status) {
    if (ok) ++passed;
  }
  return {total, passed};
}

}  // namespace astkit
