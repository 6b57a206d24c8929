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
#include <random>

#include "qjunta/oracle.hpp"

namespace qjunta {

/// Exponential-search amplitude amplification, simulated by bookkeeping on the
/// true success amplitude. Round t draws m uniformly from {0, ..., ceil(M_t)-1}
/// (M_0 = 1, M_{t+1} = min(6/5 M_t, ceil(1/sqrt(delta)))) and succeeds with
/// probability sin^2((2m+1) asin(sqrt(p))). A round costs m+1 forward and m
/// inverse oracle applications; rounds stop at the first success or once the
/// budget ceil(c_aa / sqrt(delta)) of forward applications is spent.
struct AmplificationSchedule {
  double delta = 1.0;
  double c_aa = 1.0;

  static constexpr double kGrowth = 6.0 / 5.0;

  std::uint64_t budget() const;
  std::uint64_t max_window() const;
};

struct AmplificationRun {
  bool success = false;
  std::uint64_t rounds = 0;
  QueryLedger cost;  // simulated counters only
};

/// One amplified run on a synthetic success probability p.
AmplificationRun amplify(double p, const AmplificationSchedule& schedule, std::mt19937_64& rng);

/// Exact probability that amplify() reports success, by dynamic programming over
/// the remaining budget.
double amplification_success_probability(double p, const AmplificationSchedule& schedule);

}  // namespace qjunta
