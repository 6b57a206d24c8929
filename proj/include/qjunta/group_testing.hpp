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
#include <functional>

#include "qjunta/qubits.hpp"

namespace qjunta {

/// A gapped-group-testing instance seen through its query function: decide
/// whether the hidden set A has |A| <= k or |A| >= k + d from answers to
/// "does S intersect A?".
struct GgtInstanceView {
  int n = 0;
  int k = 0;
  int d = 1;
  /// One (possibly noisy, one-sided) answer for S. Only ever called on subsets
  /// of [n].
  std::function<bool(const QubitSet&)> query;
};

enum class GgtDecision { Small, Large };

const char* to_string(GgtDecision d) noexcept;

struct GgtResult {
  GgtDecision decision = GgtDecision::Small;
  /// Members of A located by the search.
  QubitSet found;
  /// Majority-voted queries issued, and the raw calls behind them.
  std::uint64_t voted_queries = 0;
  std::uint64_t raw_calls = 0;
};

/// Repetitions per voted query: 2 ceil(log2(100 n (k + 2))) + 1.
int ggt_repetitions(int n, int k);

/// Modeled quantum query count of the group tester, ceil(c_ggt sqrt(1 + k/d)),
/// in units of calls to the bound query function.
std::uint64_t ggt_modeled_calls(int k, int d, double c_ggt);

/// Classical stand-in for the quantum gapped group tester. Repeatedly binary
/// searches [n] \ found for one more member of A, answering each query by a
/// majority over `repetitions` calls. Reports Large as soon as k + 1 members
/// are found and Small once the remaining complement tests negative.
GgtResult quantum_ggt(const GgtInstanceView& view, int repetitions);
GgtResult quantum_ggt(const GgtInstanceView& view);

}  // namespace qjunta
