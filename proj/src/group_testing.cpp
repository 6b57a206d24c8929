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

#include "qjunta/group_testing.hpp"

#include <cmath>
#include <vector>

#include "qjunta/errors.hpp"

namespace qjunta {

const char* to_string(GgtDecision d) noexcept {
  return d == GgtDecision::Small ? "small" : "large";
}

int ggt_repetitions(int n, int k) {
  const double x = 100.0 * n * (k + 2);
  return 2 * static_cast<int>(std::ceil(std::log2(x))) + 1;
}

std::uint64_t ggt_modeled_calls(int k, int d, double c_ggt) {
  require(k >= 0 && d >= 1, ErrorCode::InvalidArgument, "GGT needs k >= 0 and d >= 1");
  const double calls = c_ggt * std::sqrt(1.0 + static_cast<double>(k) / d);
  return static_cast<std::uint64_t>(std::ceil(calls - 1e-12));
}

GgtResult quantum_ggt(const GgtInstanceView& view) {
  return quantum_ggt(view, ggt_repetitions(view.n, view.k));
}

GgtResult quantum_ggt(const GgtInstanceView& view, int repetitions) {
  require(view.n >= 1, ErrorCode::InvalidArgument, "GGT ground set must be nonempty");
  require(view.k >= 0 && view.d >= 1, ErrorCode::InvalidArgument, "GGT needs k >= 0, d >= 1");
  require(repetitions >= 1 && repetitions % 2 == 1, ErrorCode::InvalidArgument,
          "GGT repetitions must be a positive odd number");
  require(static_cast<bool>(view.query), ErrorCode::InvalidArgument, "GGT needs a query function");

  GgtResult result;
  auto ask = [&](const QubitSet& s) {
    int ones = 0;
    for (int r = 0; r < repetitions; ++r) {
      ones += view.query(s) ? 1 : 0;
      ++result.raw_calls;
      // stop once the vote is decided
      if (ones > repetitions / 2 || (r + 1 - ones) > repetitions / 2) break;
    }
    ++result.voted_queries;
    return ones > repetitions / 2;
  };

  while (true) {
    if (static_cast<int>(result.found.size()) > view.k) {
      result.decision = GgtDecision::Large;
      return result;
    }
    const QubitSet rest = result.found.complement(view.n);
    if (rest.empty() || !ask(rest)) {
      result.decision = GgtDecision::Small;
      return result;
    }
    std::vector<int> candidates = rest.indices();
    while (candidates.size() > 1) {
      const auto half = static_cast<std::ptrdiff_t>(candidates.size() / 2);
      std::vector<int> left(candidates.begin(), candidates.begin() + half);
      if (ask(QubitSet(left))) {
        candidates = std::move(left);
      } else {
        candidates.erase(candidates.begin(), candidates.begin() + half);
      }
    }
    result.found.insert(candidates.front());
  }
}

}  // namespace qjunta
