// Copyright 2026 The qjunta Authors
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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "qjunta/amplification.hpp"
#include "qjunta/errors.hpp"
#include "qjunta/group_testing.hpp"
#include "qjunta/testing.hpp"
#include "reference.hpp"

namespace qjunta {
namespace {

Unitary dense(const Matrix& m) { return Unitary(DenseUnitary(m)); }

TEST(TesterParams, Schedule) {
  TesterParams p;
  p.k = 1;
  p.eps = 0.5;
  EXPECT_EQ(p.max_level(), 7);  // floor(log2 200)
  EXPECT_EQ(p.stage_count(), 9);
  EXPECT_NEAR(p.level_delta(0), 0.25 / (32.0 * std::log2(400.0)), 1e-15);
  EXPECT_NEAR(p.level_delta(3), 0.25 / (256.0 * std::log2(400.0)), 1e-15);
  EXPECT_EQ(p.level_gap(4), 16);
  EXPECT_NEAR(p.tester_two_delta(), 0.25 / 16.0, 1e-15);
  EXPECT_NEAR(p.tester_two_inclusion(), 0.5, 0.0);
  p.k = 4;
  EXPECT_EQ(p.max_level(), 9);  // floor(log2 800)
  EXPECT_NEAR(p.tester_two_inclusion(), 0.25, 0.0);
  p.eps = 0.0;
  EXPECT_THROW(p.validate(), Error);
  p.eps = 0.5;
  p.stage_votes = 2;
  EXPECT_THROW(p.validate(), Error);
}

TEST(RawInfluenceEstimator, Examples) {
  UnitaryOracle id(dense(Matrix::Identity(4, 4)), 1);
  for (int i = 0; i < 100; ++i) EXPECT_FALSE(raw_influence_estimator(id, QubitSet{1, 2}));
  UnitaryOracle zz(dense(ref::pauli_string("ZZ")), 1);
  for (int i = 0; i < 100; ++i) EXPECT_TRUE(raw_influence_estimator(zz, QubitSet{2}));
  UnitaryOracle c(dense(ref::cnot()), 2);
  int ones = 0;
  for (int i = 0; i < 10000; ++i) ones += raw_influence_estimator(c, QubitSet{1}) ? 1 : 0;
  EXPECT_NEAR(ones / 1e4, 0.5, 0.02);
  EXPECT_EQ(c.ledger().simulated_u, 10000u);
}

TEST(Amplification, BudgetAndWindow) {
  const AmplificationSchedule s{0.01, 4.0};
  EXPECT_EQ(s.budget(), 40u);
  EXPECT_EQ(s.max_window(), 10u);
  EXPECT_EQ((AmplificationSchedule{0.5, 4.0}.budget()), 6u);  // ceil(5.657)
  EXPECT_THROW((AmplificationSchedule{0.0, 4.0}.budget()), Error);
}

TEST(Amplification, ZeroProbabilityNeverSucceeds) {
  std::mt19937_64 rng(1);
  for (double delta : {0.5, 0.1, 0.01, 1e-4}) {
    EXPECT_EQ(amplification_success_probability(0.0, AmplificationSchedule{delta, 4.0}), 0.0);
    for (int i = 0; i < 200; ++i) EXPECT_FALSE(amplify(0.0, AmplificationSchedule{delta, 4.0}, rng).success);
  }
}

TEST(Amplification, CostAccountingPerRound) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const AmplificationSchedule s{0.02, 4.0};
    const AmplificationRun run = amplify(0.0, s, rng);
    // All rounds fail at p = 0, so the whole budget is spent.
    EXPECT_EQ(run.cost.simulated_u, s.budget());
    EXPECT_EQ(run.cost.simulated_u, run.cost.simulated_u_dagger + run.rounds);
  }
}

TEST(Amplification, DynamicProgramMatchesSimulation) {
  std::mt19937_64 rng(4);
  for (double p : {0.003, 0.02, 0.3}) {
    const AmplificationSchedule s{0.01, 2.0};
    const double exact = amplification_success_probability(p, s);
    int hits = 0;
    const int runs = 20000;
    for (int i = 0; i < runs; ++i) hits += amplify(p, s, rng).success ? 1 : 0;
    EXPECT_NEAR(hits / static_cast<double>(runs), exact, 4.0 * std::sqrt(exact * (1 - exact) / runs) + 1e-3)
        << p;
  }
}

TEST(Amplification, DynamicProgramMatchesHandComputedSingleRound) {
  // delta = 1: budget ceil(c_aa), window 1 so m = 0 every round; success = 1-(1-p)^budget.
  const double p = 0.3;
  EXPECT_NEAR(amplification_success_probability(p, AmplificationSchedule{1.0, 3.0}),
              1.0 - std::pow(1.0 - p, 3), 1e-12);
}

TEST(Amplification, MonotoneOverSweep) {
  for (double delta : {0.5, 0.1, 0.01}) {
    const AmplificationSchedule s{delta, TesterParams{}.c_aa};
    double previous = -1.0;
    for (double p : {0.0, 0.1 * delta, delta, 2 * delta, 1.0}) {
      const double q = amplification_success_probability(p, s);
      EXPECT_GE(q, previous) << "delta " << delta << " p " << p;
      previous = q;
    }
    EXPECT_GE(amplification_success_probability(delta, s), 0.9);
  }
}

TEST(InfluenceEstimator, OneSided) {
  const StructuredJunta j(6, QubitSet{2}, haar_random_unitary(1, 2));
  UnitaryOracle o(Unitary(j), 5);
  for (double delta : {0.5, 0.01, 1e-4})
    for (int i = 0; i < 300; ++i) EXPECT_FALSE(influence_estimator(o, QubitSet{1, 3, 4, 5, 6}, delta, 4.0));
}

TEST(InfluenceEstimator, Examples) {
  UnitaryOracle c(dense(ref::cnot()), 6);
  int ones = 0;
  for (int i = 0; i < 1000; ++i) ones += influence_estimator(c, QubitSet{1}, 0.5, 4.0) ? 1 : 0;
  EXPECT_GE(ones, 900);
  EXPECT_EQ(c.ledger().modeled_quantum, 1000u * 6u);

  UnitaryOracle z(dense(ref::pauli_string("ZZ")), 7);
  ones = 0;
  for (int i = 0; i < 1000; ++i) ones += influence_estimator(z, QubitSet{1}, 0.1, 4.0) ? 1 : 0;
  EXPECT_GE(ones, 900);
}

TEST(Ggt, Formulas) {
  EXPECT_EQ(ggt_repetitions(10, 1), 2 * 12 + 1);  // ceil(log2 3000) = 12
  EXPECT_EQ(ggt_modeled_calls(2, 1, 1.0), 2u);    // ceil(sqrt 3)
  EXPECT_EQ(ggt_modeled_calls(8, 2, 1.0), 3u);    // ceil(sqrt 5)
  EXPECT_EQ(ggt_modeled_calls(1, 4, 1.0), 2u);    // ceil(sqrt 1.25)
}

GgtInstanceView exact_view(int n, int k, int d, const QubitSet& a) {
  return GgtInstanceView{n, k, d, [a, n](const QubitSet& s) {
                           EXPECT_TRUE(s.is_subset_of(QubitSet::all(n)));
                           return s.intersects(a);
                         }};
}

TEST(Ggt, Examples) {
  EXPECT_EQ(quantum_ggt(exact_view(5, 2, 1, QubitSet{1, 2})).decision, GgtDecision::Small);
  EXPECT_EQ(quantum_ggt(exact_view(5, 2, 1, QubitSet{1, 2, 3})).decision, GgtDecision::Large);
}

TEST(Ggt, ExhaustiveSmallCases) {
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; k <= 3; ++k)
      for (int d = 1; d <= 4; ++d)
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
          std::vector<int> members;
          for (int q = 1; q <= n; ++q)
            if (mask >> (q - 1) & 1u) members.push_back(q);
          const int size = static_cast<int>(members.size());
          if (size > k && size < k + d) continue;
          const GgtResult r = quantum_ggt(exact_view(n, k, d, QubitSet(members)));
          EXPECT_EQ(r.decision, size <= k ? GgtDecision::Small : GgtDecision::Large);
        }
}

TEST(Ggt, NoisyOneSidedOracle) {
  std::mt19937_64 rng(11);
  std::bernoulli_distribution hit(0.9);
  const int n = 8, k = 2, d = 1;
  const QubitSet a{2, 5, 7};
  int large = 0;
  for (int run = 0; run < 200; ++run) {
    GgtInstanceView view{n, k, d, [&](const QubitSet& s) { return s.intersects(a) && hit(rng); }};
    large += quantum_ggt(view).decision == GgtDecision::Large ? 1 : 0;
  }
  EXPECT_GE(large, 190);
}

TEST(TesterOne, ExactJuntaAcceptedAtEveryLevel) {
  const StructuredJunta j(6, QubitSet{3}, DenseUnitary(ref::hadamard()));
  TesterParams p;
  p.k = 1;
  p.eps = 0.5;
  for (int l = 0; l <= p.max_level(); ++l) {
    UnitaryOracle o(Unitary(j), 100 + l);
    int accepts = 0;
    for (int r = 0; r < 100; ++r) accepts += tester_one(o, p, l) ? 1 : 0;
    EXPECT_GE(accepts, 85) << "level " << l;
  }
}

TEST(TesterOne, ParityThreeRejectedAtSomeLevel) {
  TesterParams p;
  p.k = 1;
  p.eps = 0.5;
  int best = 0;
  for (int l = 0; l <= p.max_level(); ++l) {
    UnitaryOracle o(dense(ref::pauli_string("ZZZ")), 200 + l);
    int rejects = 0;
    for (int r = 0; r < 100; ++r) rejects += tester_one(o, p, l) ? 0 : 1;
    best = std::max(best, rejects);
  }
  EXPECT_GE(best, 85);
}

TEST(TesterOne, IdentityAlwaysAccepted) {
  for (int k : {1, 2, 3}) {
    TesterParams p;
    p.k = k;
    UnitaryOracle o(dense(Matrix::Identity(8, 8)), 1);
    for (int l = 0; l <= p.max_level(); ++l) EXPECT_TRUE(tester_one(o, p, l));
  }
  TesterParams p;
  UnitaryOracle o(dense(Matrix::Identity(2, 2)), 1);
  EXPECT_THROW(tester_one(o, p, p.max_level() + 1), Error);
}

TEST(TesterTwo, IdentityAccepts) {
  TesterParams p;
  UnitaryOracle o(dense(Matrix::Identity(8, 8)), 1);
  double estimate = -1.0;
  EXPECT_TRUE(tester_two(o, p, &estimate));
  EXPECT_EQ(estimate, 0.0);
}

// Exact acceptance probability of one Tester-II subroutine call: average of
// the amplification success probability over all random subsets.
double subroutine_probability(const Matrix& u, const TesterParams& p) {
  const int n = static_cast<int>(std::lround(std::log2(static_cast<double>(u.rows()))));
  const double q = p.tester_two_inclusion();
  const AmplificationSchedule s{p.tester_two_delta(), p.c_aa};
  double total = 0.0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> members;
    for (int i = 1; i <= n; ++i)
      if (mask >> (i - 1) & 1u) members.push_back(i);
    const double weight = std::pow(q, members.size()) * std::pow(1 - q, n - members.size());
    const double inf = members.empty() ? 0.0 : ref::influence(u, members);
    total += weight * amplification_success_probability(inf, s);
  }
  return total;
}

TEST(TesterTwo, JuntaSubroutineBelowThreshold) {
  for (int k : {1, 2}) {
    TesterParams p;
    p.k = k;
    const StructuredJunta j(4, k == 1 ? QubitSet{2} : QubitSet{1, 4}, haar_random_unitary(k, 9));
    EXPECT_LE(subroutine_probability(j.to_dense(), p), 0.75 + 1e-12);
    UnitaryOracle o(Unitary(j), 10 + k);
    int accepts = 0;
    for (int r = 0; r < 20; ++r) accepts += tester_two(o, p) ? 1 : 0;
    EXPECT_GE(accepts, 19);
  }
}

TEST(JuntaTester, IdentityYesWithDeterministicTesterOne) {
  TesterParams p;
  UnitaryOracle o(dense(Matrix::Identity(4, 4)), 1);
  const JuntaTestResult r = junta_tester(o, p);
  EXPECT_TRUE(r.yes);
  ASSERT_EQ(static_cast<int>(r.stages.size()), p.stage_count());
  for (const auto& s : r.stages)
    if (s.name == "tester_one") EXPECT_EQ(s.accept_votes, s.votes);
  EXPECT_EQ(r.cost.modeled_quantum, junta_tester_modeled_cost(p));
}

TEST(JuntaTester, ParityRejected) {
  TesterParams p;
  p.k = 1;
  UnitaryOracle o(dense(ref::pauli_string("ZZ")), 3);
  EXPECT_FALSE(junta_tester(o, p).yes);
}

TEST(JuntaTester, ModeledCostFormula) {
  TesterParams p;
  p.k = 2;
  p.eps = 0.5;
  std::uint64_t expect = 0;
  for (int l = 0; l <= 8; ++l) {
    const double delta = 0.25 / (std::pow(2.0, l + 5) * std::log2(800.0));
    expect += static_cast<std::uint64_t>(std::ceil(std::sqrt(1.0 + 2.0 / std::pow(2.0, l)))) *
              static_cast<std::uint64_t>(std::ceil(4.0 / std::sqrt(delta)));
  }
  expect += 1100u * static_cast<std::uint64_t>(std::ceil(4.0 / std::sqrt(0.25 / 32.0)));
  EXPECT_EQ(junta_tester_modeled_cost(p), 3 * expect);
}

}  // namespace
}  // namespace qjunta
