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

#include "qjunta/amplification.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qjunta/errors.hpp"

namespace qjunta {

namespace {

double grover_success(double theta, std::uint64_t m) {
  const double s = std::sin((2.0 * static_cast<double>(m) + 1.0) * theta);
  return s * s;
}

double angle_of(double p) { return std::asin(std::sqrt(std::clamp(p, 0.0, 1.0))); }

// Window sizes ceil(M_t) until they reach the cap.
std::vector<std::uint64_t> window_sequence(const AmplificationSchedule& s) {
  const std::uint64_t cap = s.max_window();
  std::vector<std::uint64_t> windows;
  double m = 1.0;
  while (true) {
    const auto w = std::min<std::uint64_t>(static_cast<std::uint64_t>(std::ceil(m - 1e-12)), cap);
    windows.push_back(w);
    if (w >= cap) break;
    m = std::min(m * AmplificationSchedule::kGrowth, static_cast<double>(cap));
  }
  return windows;
}

}  // namespace

std::uint64_t AmplificationSchedule::budget() const {
  require(delta > 0.0 && delta <= 1.0, ErrorCode::InvalidArgument, "delta must lie in (0, 1]");
  require(c_aa > 0.0, ErrorCode::InvalidArgument, "c_aa must be positive");
  return static_cast<std::uint64_t>(std::ceil(c_aa / std::sqrt(delta) - 1e-12));
}

std::uint64_t AmplificationSchedule::max_window() const {
  return std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::ceil(1.0 / std::sqrt(delta) - 1e-12)));
}

AmplificationRun amplify(double p, const AmplificationSchedule& schedule, std::mt19937_64& rng) {
  const double theta = angle_of(p);
  const std::uint64_t cap = schedule.max_window();
  std::uint64_t remaining = schedule.budget();
  double window = 1.0;
  AmplificationRun run;
  while (remaining > 0) {
    const auto w = std::min<std::uint64_t>(static_cast<std::uint64_t>(std::ceil(window - 1e-12)), cap);
    std::uniform_int_distribution<std::uint64_t> pick(0, w - 1);
    const std::uint64_t m = std::min(pick(rng), remaining - 1);
    remaining -= m + 1;
    run.rounds += 1;
    run.cost.simulated_u += m + 1;
    run.cost.simulated_u_dagger += m;
    std::bernoulli_distribution hit(grover_success(theta, m));
    if (hit(rng)) {
      run.success = true;
      return run;
    }
    window = std::min(window * AmplificationSchedule::kGrowth, static_cast<double>(cap));
  }
  return run;
}

double amplification_success_probability(double p, const AmplificationSchedule& schedule) {
  const double theta = angle_of(p);
  const std::uint64_t budget = schedule.budget();
  const std::vector<std::uint64_t> windows = window_sequence(schedule);

  // fail[b] = probability of never succeeding with b forward applications left,
  // starting at the current round index.
  auto step = [&](std::uint64_t w, const std::vector<double>& next) {
    std::vector<double> cur(budget + 1, 1.0);
    for (std::uint64_t b = 1; b <= budget; ++b) {
      double acc = 0.0;
      for (std::uint64_t m0 = 0; m0 < w; ++m0) {
        const std::uint64_t m = std::min(m0, b - 1);
        acc += (1.0 - grover_success(theta, m)) * next[b - (m + 1)];
      }
      cur[b] = acc / static_cast<double>(w);
    }
    return cur;
  };

  // Saturated regime: the window no longer changes, so fail depends on b only.
  const std::uint64_t w_sat = windows.back();
  std::vector<double> fail(budget + 1, 1.0);
  for (std::uint64_t b = 1; b <= budget; ++b) {
    double acc = 0.0;
    for (std::uint64_t m0 = 0; m0 < w_sat; ++m0) {
      const std::uint64_t m = std::min(m0, b - 1);
      acc += (1.0 - grover_success(theta, m)) * fail[b - (m + 1)];
    }
    fail[b] = acc / static_cast<double>(w_sat);
  }
  for (auto it = windows.rbegin() + 1; it != windows.rend(); ++it) fail = step(*it, fail);
  return 1.0 - fail[budget];
}

}  // namespace qjunta
