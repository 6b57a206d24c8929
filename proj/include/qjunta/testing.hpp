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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qjunta/amplification.hpp"
#include "qjunta/group_testing.hpp"
#include "qjunta/oracle.hpp"

namespace qjunta {

/// Parameters of the junta tester.
///
///   delta_l = eps^2 / (2^{l+5} log2(400k)),  d_l = 2^l,  l = 0..floor(log2(200k))
///   Tester-II threshold delta = eps^2 / (16k)
struct TesterParams {
  int k = 1;
  double eps = 0.5;
  /// Amplitude-amplification budget constant: ceil(c_aa / sqrt(delta)) calls.
  double c_aa = 4.0;
  /// Group-testing cost constant: ceil(c_ggt sqrt(1 + k/d)) estimator calls.
  double c_ggt = 1.0;
  /// Samples used by Tester-II to estimate its acceptance probability to +-0.05
  /// at confidence 0.99 (Hoeffding).
  int tester_two_samples = 1100;
  /// Each stage is repeated this many times and decided by majority.
  int stage_votes = 3;

  void validate() const;
  int max_level() const;
  double level_delta(int l) const;
  int level_gap(int l) const;
  double tester_two_delta() const;
  /// Probability that Tester-II puts a qubit in its random subset: 1/k, except
  /// 1/2 at k = 1 (where 1/k would always pick every qubit).
  double tester_two_inclusion() const;
  int stage_count() const { return max_level() + 2; }
};

/// Bell-measures the pairs of S once; 1 iff the outcome is not all-identity.
/// E[output] = Inf_S[U].
bool raw_influence_estimator(UnitaryOracle& oracle, const QubitSet& subset);

/// Amplified estimator: one-sided (Inf_S = 0 gives 0 always), outputs 1 with
/// probability >= 0.9 once Inf_S >= delta. Charges the simulated rounds and
/// ceil(c_aa / sqrt(delta)) modeled queries.
bool influence_estimator(UnitaryOracle& oracle, const QubitSet& subset, double delta, double c_aa);

/// Same run without the modeled charge, for callers that account for the
/// modeled cost themselves (the group tester).
bool amplified_influence_estimate(UnitaryOracle& oracle, const QubitSet& subset, double delta,
                                  double c_aa);

struct StageOutcome {
  std::string name;    // "tester_one" or "tester_two"
  int level = -1;      // l for tester_one
  int accept_votes = 0;
  int votes = 0;
  bool accept = false;
  /// tester_two only: mean acceptance estimate over the votes.
  double estimate = 0.0;
  QueryLedger cost;
};

/// One run of Tester-I at level l: group testing with d = d_l over the
/// amplified estimator at delta_l. Accepts iff GGT answers Small.
bool tester_one(UnitaryOracle& oracle, const TesterParams& params, int level);

/// One run of Tester-II; `estimate` receives the estimated acceptance
/// probability of the random-subset subroutine. Accepts iff estimate <= 0.8.
bool tester_two(UnitaryOracle& oracle, const TesterParams& params, double* estimate = nullptr);

struct JuntaTestResult {
  bool yes = false;
  std::vector<StageOutcome> stages;
  QueryLedger cost;
};

/// Runs every Tester-I level and Tester-II (each by majority over stage_votes
/// runs); answers yes iff all stages accept.
JuntaTestResult junta_tester(UnitaryOracle& oracle, const TesterParams& params);

/// Modeled query total of junta_tester, which does not depend on the instance.
std::uint64_t junta_tester_modeled_cost(const TesterParams& params);

}  // namespace qjunta
