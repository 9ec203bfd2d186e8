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

#include <map>
#include <random>
#include <string>
#include <vector>

#include "astkit/error.h"
#include "gtest/gtest.h"
#include "nlohmann/json.hpp"
#include "tests/support/error_checks.h"

namespace astkit {
namespace {

using astkit::testing::ExpectError;

// One problem's attempts from per-attempt (synth_ok, functional_ok) pairs;
// functional implies a passing 1/1 constraint run.
std::vector<AttemptOutcome> Problem(
    const std::string& id,
    const std::vector<std::pair<bool, bool>>& attempts) {
  std::vector<AttemptOutcome> outcomes;
  int idx = 1;
  for (auto [synth, functional] : attempts) {
    outcomes.push_back(MakeAttemptOutcome(id, idx++, synth, functional ? 1 : 0,
                                          functional ? 1 : 0));
  }
  return outcomes;
}

std::vector<AttemptOutcome> Concat(
    std::initializer_list<std::vector<AttemptOutcome>> lists) {
  std::vector<AttemptOutcome> all;
  for (const auto& list : lists) {
    all.insert(all.end(), list.begin(), list.end());
  }
  return all;
}

TEST(AttemptOutcomeTest, FunctionalOkIsDerived) {
  AttemptOutcome pass = MakeAttemptOutcome("p", 1, true, 3, 3);
  EXPECT_TRUE(pass.functional_ok);
  AttemptOutcome partial = MakeAttemptOutcome("p", 1, true, 3, 2);
  EXPECT_FALSE(partial.functional_ok);
  AttemptOutcome no_constraints = MakeAttemptOutcome("p", 1, true, 0, 0);
  EXPECT_FALSE(no_constraints.functional_ok);  // vacuous run is a failure
  AttemptOutcome no_synth = MakeAttemptOutcome("p", 1, false, 3, 3);
  EXPECT_FALSE(no_synth.functional_ok);
}

TEST(AttemptOutcomeTest, ValidateRejectsInconsistentRecords) {
  AttemptOutcome outcome = MakeAttemptOutcome("p", 1, true, 2, 2);
  EXPECT_NO_THROW(Validate(outcome));
  outcome.functional_ok = false;
  ExpectError(ErrorCode::kMalformedResponse, [&] { Validate(outcome); });
  outcome = MakeAttemptOutcome("p", 1, true, 2, 2);
  outcome.attempt_idx = 0;
  ExpectError(ErrorCode::kMalformedResponse, [&] { Validate(outcome); });
  outcome = MakeAttemptOutcome("p", 1, true, 2, 2);
  outcome.constraints_passed = 3;
  ExpectError(ErrorCode::kMalformedResponse, [&] { Validate(outcome); });
  // MakeAttemptOutcome validates eagerly, so a missing id throws on
  // construction.
  ExpectError(ErrorCode::kMalformedResponse,
              [] { MakeAttemptOutcome("", 1, true, 2, 2); });
}

TEST(PassAtKTest, WorkedTwoProblemExample) {
  // P1 = [pass, fail, fail], P2 = [fail, fail, pass].
  auto outcomes = Concat({Problem("P1", {{true, true},
                                         {true, false},
                                         {false, false}}),
                          Problem("P2", {{true, false},
                                         {false, false},
                                         {true, true}})});
  EXPECT_EQ(PassAtK(outcomes, 1, SuccessPredicate::kFunctional),
            (Ratio{1, 2}));  // pass@1 = 0.50
  EXPECT_EQ(PassAtK(outcomes, 3, SuccessPredicate::kFunctional),
            (Ratio{2, 2}));  // pass@3 = 1.00
  EXPECT_EQ(PassAtK(outcomes, 1, SuccessPredicate::kSynth), (Ratio{2, 2}));
  EXPECT_DOUBLE_EQ(PassAtK(outcomes, 1, SuccessPredicate::kFunctional).Value(),
                   0.50);
}

TEST(PassAtKTest, AllPassingIsOneForEveryK) {
  auto outcomes = Concat({Problem("a", {{true, true}, {true, true}}),
                          Problem("b", {{true, true}, {true, true}})});
  for (int k = 1; k <= 2; ++k) {
    EXPECT_EQ(PassAtK(outcomes, k, SuccessPredicate::kFunctional),
              (Ratio{2, 2}));
    EXPECT_EQ(PassAtK(outcomes, k, SuccessPredicate::kSynth), (Ratio{2, 2}));
  }
}

TEST(PassAtKTest, AttemptOrderUsesAttemptIdxNotInputOrder) {
  std::vector<AttemptOutcome> outcomes = {
      MakeAttemptOutcome("p", 2, true, 1, 1),   // second attempt passes
      MakeAttemptOutcome("p", 1, false, 0, 0),  // first fails
  };
  EXPECT_EQ(PassAtK(outcomes, 1, SuccessPredicate::kFunctional),
            (Ratio{0, 1}));
  EXPECT_EQ(PassAtK(outcomes, 2, SuccessPredicate::kFunctional),
            (Ratio{1, 1}));
}

TEST(PassAtKTest, Errors) {
  ExpectError(ErrorCode::kEmptyInput, [] {
    PassAtK({}, 1, SuccessPredicate::kSynth);
  });
  auto outcomes = Problem("p", {{true, true}, {true, true}});
  ExpectError(ErrorCode::kInsufficientAttempts, [&] {
    PassAtK(outcomes, 3, SuccessPredicate::kSynth);
  });
  ExpectError(ErrorCode::kInsufficientAttempts, [&] {
    PassAtK(outcomes, 0, SuccessPredicate::kSynth);
  });
}

TEST(PassAtKTest, SynthAtOneRendersTableTwoHeadline) {
  // 156 problems, 145 with a first-attempt synthesis success.
  std::vector<AttemptOutcome> outcomes;
  for (int p = 0; p < 156; ++p) {
    outcomes.push_back(
        MakeAttemptOutcome("p" + std::to_string(p), 1, p < 145, 0, 0));
  }
  Ratio synth_at_1 = PassAtK(outcomes, 1, SuccessPredicate::kSynth);
  EXPECT_EQ(synth_at_1, (Ratio{145, 156}));
  EXPECT_EQ(synth_at_1.Percent(), "92.95%");
}

TEST(RatioTest, PercentRendersHalfUpTwoDecimals) {
  EXPECT_EQ((Ratio{145, 156}).Percent(), "92.95%");
  EXPECT_EQ((Ratio{1, 2}).Percent(), "50.00%");
  EXPECT_EQ((Ratio{1, 1}).Percent(), "100.00%");
  EXPECT_EQ((Ratio{0, 7}).Percent(), "0.00%");
  EXPECT_EQ((Ratio{1, 3}).Percent(), "33.33%");
  EXPECT_EQ((Ratio{2, 3}).Percent(), "66.67%");
  EXPECT_EQ((Ratio{1, 800}).Percent(), "0.13%");   // 0.125 rounds up
  EXPECT_EQ((Ratio{1, 8000}).Percent(), "0.01%");  // 0.0125 rounds down
}

TEST(PassAtKTest, MonotoneAndOracleEquivalentOnRandomMatrices) {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> problems_dist(1, 6);
  std::uniform_int_distribution<int> attempts_dist(1, 6);
  std::bernoulli_distribution synth_dist(0.6);
  std::bernoulli_distribution pass_dist(0.4);
  for (int iter = 0; iter < 1000; ++iter) {
    int n_problems = problems_dist(rng);
    int n_attempts = attempts_dist(rng);
    std::vector<AttemptOutcome> outcomes;
    // success[problem][attempt] for the brute-force re-count.
    std::vector<std::vector<std::pair<bool, bool>>> grid(n_problems);
    for (int p = 0; p < n_problems; ++p) {
      for (int a = 1; a <= n_attempts; ++a) {
        bool synth = synth_dist(rng);
        bool pass = synth && pass_dist(rng);
        grid[p].push_back({synth, pass});
        outcomes.push_back(MakeAttemptOutcome("p" + std::to_string(p), a,
                                              synth, pass ? 1 : 0,
                                              pass ? 1 : 0));
      }
    }
    Ratio previous_synth{0, 1};
    Ratio previous_pass{0, 1};
    for (int k = 1; k <= n_attempts; ++k) {
      Ratio synth_k = PassAtK(outcomes, k, SuccessPredicate::kSynth);
      Ratio pass_k = PassAtK(outcomes, k, SuccessPredicate::kFunctional);

      // Brute-force oracle: count problems with any success in the first k.
      long long synth_hits = 0;
      long long pass_hits = 0;
      for (int p = 0; p < n_problems; ++p) {
        bool any_synth = false;
        bool any_pass = false;
        for (int a = 0; a < k; ++a) {
          any_synth |= grid[p][a].first;
          any_pass |= grid[p][a].second;
        }
        synth_hits += any_synth ? 1 : 0;
        pass_hits += any_pass ? 1 : 0;
      }
      ASSERT_EQ(synth_k, (Ratio{synth_hits, n_problems})) << "iter " << iter;
      ASSERT_EQ(pass_k, (Ratio{pass_hits, n_problems})) << "iter " << iter;

      // Monotone in k.
      ASSERT_GE(synth_k.Value(), previous_synth.Value()) << "iter " << iter;
      ASSERT_GE(pass_k.Value(), previous_pass.Value()) << "iter " << iter;
      previous_synth = synth_k;
      previous_pass = pass_k;
    }
  }
}

TEST(PassAtKUnbiasedTest, MatchesCombinatorialFormula) {
  // One problem, n = 3 attempts, c = 1 success.
  auto outcomes =
      Problem("p", {{true, true}, {false, false}, {false, false}});
  EXPECT_NEAR(PassAtKUnbiased(outcomes, 1, SuccessPredicate::kFunctional),
              1.0 / 3.0, 1e-12);
  EXPECT_NEAR(PassAtKUnbiased(outcomes, 2, SuccessPredicate::kFunctional),
              2.0 / 3.0, 1e-12);
  EXPECT_NEAR(PassAtKUnbiased(outcomes, 3, SuccessPredicate::kFunctional),
              1.0, 1e-12);
}

TEST(ClassifyTiersTest, ExplicitBoundaries) {
  std::vector<ProblemMeta> metas = {{"a", 5, {}}, {"b", 15, {}}};
  ClassifyTiers(metas, std::pair{0.0, 10.0});
  EXPECT_EQ(metas[0].tier, Tier::kT2);  // 5 > 0, <= 10
  EXPECT_EQ(metas[1].tier, Tier::kT3);  // 15 > 10
  std::vector<ProblemMeta> inclusive = {{"a", 10, {}}};
  ClassifyTiers(inclusive, std::pair{5.0, 10.0});
  EXPECT_EQ(inclusive[0].tier, Tier::kT2);  // boundary goes to the lower tier
}

TEST(ClassifyTiersTest, InvalidBoundariesRejected) {
  std::vector<ProblemMeta> metas = {{"a", 5, {}}};
  ExpectError(ErrorCode::kInvalidBoundaries,
              [&] { ClassifyTiers(metas, std::pair{10.0, 10.0}); });
  ExpectError(ErrorCode::kInvalidBoundaries,
              [&] { ClassifyTiers(metas, std::pair{20.0, 10.0}); });
}

TEST(ClassifyTiersTest, DefaultPercentileTerciles) {
  std::vector<ProblemMeta> metas = {
      {"small", 100, {}}, {"medium", 500, {}}, {"large", 2000, {}}};
  ClassifyTiers(metas);
  EXPECT_EQ(metas[0].tier, Tier::kT1);
  EXPECT_EQ(metas[1].tier, Tier::kT2);
  EXPECT_EQ(metas[2].tier, Tier::kT3);
}

TEST(ClassifyTiersTest, AllSameLengthAreT1) {
  std::vector<ProblemMeta> metas = {
      {"a", 300, {}}, {"b", 300, {}}, {"c", 300, {}}};
  ClassifyTiers(metas);
  for (const auto& meta : metas) EXPECT_EQ(meta.tier, Tier::kT1);
}

TEST(ClassifyTiersTest, PartitionCoversEveryProblem) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long long> chars_dist(1, 5000);
  std::vector<ProblemMeta> metas;
  for (int i = 0; i < 40; ++i) {
    metas.push_back({"p" + std::to_string(i), chars_dist(rng), {}});
  }
  ClassifyTiers(metas);
  std::map<Tier, int> counts;
  for (const auto& meta : metas) {
    ASSERT_TRUE(meta.tier.has_value());
    ++counts[*meta.tier];
  }
  EXPECT_EQ(counts[Tier::kT1] + counts[Tier::kT2] + counts[Tier::kT3], 40);
}

std::map<std::string, std::vector<AttemptOutcome>> DemoOutcomes() {
  return {{"demo", Concat({Problem("P1", {{true, true},
                                          {true, false},
                                          {false, false}}),
                           Problem("P2", {{true, false},
                                          {false, false},
                                          {true, true}})})}};
}

std::vector<ProblemMeta> DemoMetas() {
  std::vector<ProblemMeta> metas = {{"P1", 220, Tier::kT1},
                                    {"P2", 780, Tier::kT3}};
  return metas;
}

TEST(AggregateReportTest, OverallAndTierScopes) {
  std::vector<int> k_set = {1, 3};
  MetricReport report =
      AggregateReport(DemoOutcomes(), DemoMetas(), k_set, true);
  ASSERT_TRUE(report.models.count("demo"));
  const auto& scopes = report.models.at("demo").scopes;
  ASSERT_TRUE(scopes.count("overall"));
  EXPECT_EQ(scopes.at("overall").at(1).pass, (Ratio{1, 2}));
  EXPECT_EQ(scopes.at("overall").at(3).pass, (Ratio{2, 2}));
  EXPECT_EQ(scopes.at("overall").at(1).synth, (Ratio{2, 2}));
  // One problem per tier here.
  EXPECT_EQ(scopes.at("T1").at(1).pass, (Ratio{1, 1}));
  EXPECT_EQ(scopes.at("T3").at(1).pass, (Ratio{0, 1}));
  EXPECT_EQ(report.problems_per_scope.at("overall"), 2);
  EXPECT_EQ(report.problems_per_scope.at("T1"), 1);
  EXPECT_EQ(report.problems_per_scope.at("T3"), 1);

  // The Tables III/IV-style matrix: P2 fails @1 and passes @3.
  const auto& matrix = report.models.at("demo").matrix;
  ASSERT_TRUE(matrix.count("P2"));
  EXPECT_FALSE(matrix.at("P2").at(1).second);
  EXPECT_TRUE(matrix.at("P2").at(3).second);
  EXPECT_TRUE(matrix.at("P2").at(1).first);  // synth ok at k=1
}

TEST(AggregateReportTest, OverallEqualsWeightedTierAverage) {
  std::mt19937 rng(17);
  std::bernoulli_distribution flip(0.5);
  std::uniform_int_distribution<long long> chars_dist(1, 4000);
  for (int iter = 0; iter < 200; ++iter) {
    std::map<std::string, std::vector<AttemptOutcome>> outcomes;
    std::vector<ProblemMeta> metas;
    int n_problems = 6;
    int n_attempts = 3;
    for (int p = 0; p < n_problems; ++p) {
      std::string id = "p" + std::to_string(p);
      metas.push_back({id, chars_dist(rng), {}});
      for (int a = 1; a <= n_attempts; ++a) {
        bool synth = flip(rng);
        bool pass = synth && flip(rng);
        outcomes["m"].push_back(
            MakeAttemptOutcome(id, a, synth, pass ? 1 : 0, pass ? 1 : 0));
      }
    }
    ClassifyTiers(metas);
    std::vector<int> k_set = {1, 2, 3};
    MetricReport report = AggregateReport(outcomes, metas, k_set);
    const auto& scopes = report.models.at("m").scopes;
    for (int k : k_set) {
      long long num = 0;
      long long den = 0;
      for (const auto& [scope, cells] : scopes) {
        if (scope == "overall") continue;
        num += cells.at(k).pass.num;
        den += cells.at(k).pass.den;
      }
      ASSERT_EQ(num, scopes.at("overall").at(k).pass.num) << "iter " << iter;
      ASSERT_EQ(den, scopes.at("overall").at(k).pass.den) << "iter " << iter;
    }
  }
}

TEST(AggregateReportTest, MissingMetaOrTierRejected) {
  std::vector<int> k_set = {1};
  std::vector<ProblemMeta> no_meta;  // P1/P2 missing entirely
  ExpectError(ErrorCode::kInvalidConfig, [&] {
    AggregateReport(DemoOutcomes(), no_meta, k_set);
  });
  std::vector<ProblemMeta> untiered = {{"P1", 220, {}}, {"P2", 780, {}}};
  ExpectError(ErrorCode::kInvalidConfig, [&] {
    AggregateReport(DemoOutcomes(), untiered, k_set);
  });
}

TEST(AggregateReportTest, JsonAndTableRendering) {
  std::vector<int> k_set = {1, 3};
  MetricReport report =
      AggregateReport(DemoOutcomes(), DemoMetas(), k_set, true);
  nlohmann::json j = nlohmann::json::parse(ToJson(report));
  EXPECT_EQ(j["k_set"], (std::vector<int>{1, 3}));
  EXPECT_EQ(j["models"]["demo"]["scopes"]["overall"]["1"]["pass"]["percent"],
            "50.00%");
  EXPECT_EQ(j["models"]["demo"]["scopes"]["overall"]["3"]["pass"]["num"], 2);

  std::string table = ToTable(report);
  EXPECT_NE(table.find("demo"), std::string::npos);
  EXPECT_NE(table.find("overall"), std::string::npos);
  EXPECT_NE(table.find("50.00%"), std::string::npos);
  EXPECT_NE(table.find("100.00%"), std::string::npos);
  // Matrix rows render the check/cross shape as S(ynth)/P(ass) flags.
  EXPECT_NE(table.find("P2"), std::string::npos);
  EXPECT_NE(table.find("@1:S+P-"), std::string::npos);
  EXPECT_NE(table.find("@3:S+P+"), std::string::npos);
}

TEST(ParseSimLogTest, CountsAndLastOccurrence) {
  EXPECT_EQ(ParseSimLog("CONSTRAINT 1 PASS\nCONSTRAINT 2 FAIL"),
            (std::pair{2, 1}));
  EXPECT_EQ(ParseSimLog(""), (std::pair{0, 0}));
  EXPECT_EQ(ParseSimLog("CONSTRAINT 1 FAIL\nCONSTRAINT 1 PASS"),
            (std::pair{1, 1}));
  EXPECT_EQ(ParseSimLog("CONSTRAINT 1 PASS\nCONSTRAINT 1 FAIL"),
            (std::pair{1, 0}));
}

TEST(ParseSimLogTest, IgnoresChatterUnlessStrict) {
  std::string log =
      "INFO: starting testbench\n"
      "CONSTRAINT 1 PASS\n"
      "\n"
      "CONSTRAINT 2 PASS\n"
      "done.\n";
  EXPECT_EQ(ParseSimLog(log), (std::pair{2, 2}));
  ExpectError(ErrorCode::kMalformedLogLine,
              [&] { ParseSimLog(log, /*strict=*/true); });
  // Blank lines are fine even in strict mode.
  EXPECT_EQ(ParseSimLog("CONSTRAINT 3 FAIL\n\n", /*strict=*/true),
            (std::pair{1, 0}));
}

TEST(ParseSimLogTest, StrictRejectsMalformedConstraintLines) {
  ExpectError(ErrorCode::kMalformedLogLine, [] {
    ParseSimLog("CONSTRAINT 7 PASS extra", /*strict=*/true);
  });
  ExpectError(ErrorCode::kMalformedLogLine, [] {
    ParseSimLog("CONSTRAINT x PASS", /*strict=*/true);
  });
  ExpectError(ErrorCode::kMalformedLogLine, [] {
    ParseSimLog("CONSTRAINT 7 MAYBE", /*strict=*/true);
  });
}

}  // namespace
}  // namespace astkit
