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

#include "qjunta/testing.hpp"

#include <cmath>

#include "qjunta/errors.hpp"

namespace qjunta {

void TesterParams::validate() const {
  require(k >= 1, ErrorCode::InvalidArgument, "tester needs k >= 1");
  require(eps > 0.0 && eps <= 1.0, ErrorCode::InvalidArgument, "tester needs eps in (0, 1]");
  require(c_aa > 0.0 && c_ggt > 0.0, ErrorCode::InvalidArgument,
          "calibration constants must be positive");
  require(tester_two_samples >= 1, ErrorCode::InvalidArgument, "Tester-II needs samples");
  require(stage_votes >= 1 && stage_votes % 2 == 1, ErrorCode::InvalidArgument,
          "stage votes must be a positive odd number");
}

int TesterParams::max_level() const {
  return static_cast<int>(std::floor(std::log2(200.0 * k) + 1e-12));
}

double TesterParams::level_delta(int l) const {
  return eps * eps / (std::ldexp(1.0, l + 5) * std::log2(400.0 * k));
}

int TesterParams::level_gap(int l) const { return 1 << l; }

double TesterParams::tester_two_delta() const { return eps * eps / (16.0 * k); }

double TesterParams::tester_two_inclusion() const { return k == 1 ? 0.5 : 1.0 / k; }

bool raw_influence_estimator(UnitaryOracle& oracle, const QubitSet& subset) {
  return !oracle.bell_outcome_on(subset).all_identity;
}

bool amplified_influence_estimate(UnitaryOracle& oracle, const QubitSet& subset, double delta,
                                  double c_aa) {
  if (subset.empty()) return false;  // Inf of the empty set is 0
  const double p = detail::OracleAccess::true_success_probability(oracle, subset);
  const AmplificationRun run = amplify(p, AmplificationSchedule{delta, c_aa}, oracle.rng());
  oracle.charge(run.cost);
  return run.success;
}

bool influence_estimator(UnitaryOracle& oracle, const QubitSet& subset, double delta,
                         double c_aa) {
  QueryLedger modeled;
  modeled.modeled_quantum = AmplificationSchedule{delta, c_aa}.budget();
  oracle.charge(modeled);
  return amplified_influence_estimate(oracle, subset, delta, c_aa);
}

bool tester_one(UnitaryOracle& oracle, const TesterParams& params, int level) {
  params.validate();
  require(level >= 0 && level <= params.max_level(), ErrorCode::InvalidArgument,
          "Tester-I level out of range");
  const double delta = params.level_delta(level);
  const int d = params.level_gap(level);

  QueryLedger modeled;
  modeled.modeled_quantum = ggt_modeled_calls(params.k, d, params.c_ggt) *
                            AmplificationSchedule{delta, params.c_aa}.budget();
  oracle.charge(modeled);

  GgtInstanceView view;
  view.n = oracle.qubits();
  view.k = params.k;
  view.d = d;
  view.query = [&](const QubitSet& s) {
    return amplified_influence_estimate(oracle, s, delta, params.c_aa);
  };
  return quantum_ggt(view).decision == GgtDecision::Small;
}

bool tester_two(UnitaryOracle& oracle, const TesterParams& params, double* estimate) {
  params.validate();
  const double delta = params.tester_two_delta();
  const double inclusion = params.tester_two_inclusion();
  const int n = oracle.qubits();
  std::bernoulli_distribution include(inclusion);
  int ones = 0;
  for (int r = 0; r < params.tester_two_samples; ++r) {
    std::vector<int> members;
    for (int q = 1; q <= n; ++q)
      if (include(oracle.rng())) members.push_back(q);
    if (influence_estimator(oracle, QubitSet(std::move(members)), delta, params.c_aa)) ++ones;
  }
  const double p_hat = static_cast<double>(ones) / params.tester_two_samples;
  if (estimate) *estimate = p_hat;
  return p_hat <= 0.8;
}

JuntaTestResult junta_tester(UnitaryOracle& oracle, const TesterParams& params) {
  params.validate();
  JuntaTestResult result;
  const QueryLedger start = oracle.ledger();

  auto run_stage = [&](const std::string& name, int level, auto&& once) {
    StageOutcome stage;
    stage.name = name;
    stage.level = level;
    stage.votes = params.stage_votes;
    const QueryLedger before = oracle.ledger();
    double estimate_sum = 0.0;
    for (int v = 0; v < params.stage_votes; ++v) {
      double estimate = 0.0;
      if (once(&estimate)) ++stage.accept_votes;
      estimate_sum += estimate;
    }
    stage.accept = 2 * stage.accept_votes > stage.votes;
    stage.estimate = estimate_sum / params.stage_votes;
    stage.cost = oracle.ledger() - before;
    result.stages.push_back(stage);
  };

  for (int l = 0; l <= params.max_level(); ++l) {
    run_stage("tester_one", l, [&](double*) { return tester_one(oracle, params, l); });
  }
  run_stage("tester_two", -1, [&](double* est) { return tester_two(oracle, params, est); });

  result.yes = true;
  for (const auto& s : result.stages) result.yes = result.yes && s.accept;
  result.cost = oracle.ledger() - start;
  return result;
}

std::uint64_t junta_tester_modeled_cost(const TesterParams& params) {
  params.validate();
  std::uint64_t total = 0;
  for (int l = 0; l <= params.max_level(); ++l) {
    total += ggt_modeled_calls(params.k, params.level_gap(l), params.c_ggt) *
             AmplificationSchedule{params.level_delta(l), params.c_aa}.budget();
  }
  total += static_cast<std::uint64_t>(params.tester_two_samples) *
           AmplificationSchedule{params.tester_two_delta(), params.c_aa}.budget();
  return total * static_cast<std::uint64_t>(params.stage_votes);
}

}  // namespace qjunta
