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
#include <vector>

#include "qjunta/oracle.hpp"
#include "qjunta/tomography.hpp"
#include "qjunta/unitary.hpp"

namespace qjunta {

/// Parameters of the junta learner.
///
///   gamma = eps^2 / (4k),  t = ceil(c_l 4^k / eps^2),  tomography error eps^2 / 4,
///   at most 10t preparation attempts.
struct LearnerParams {
  int k = 1;
  double eps = 0.25;
  double c_l = 48.0;
  double c_t = 12.0;
  TomographyBackend backend = TomographyBackend::Exact;

  void validate() const;
  double gamma() const;
  std::uint64_t copies_target() const;
  std::uint64_t max_attempts() const { return 10 * copies_target(); }
  double tomography_error() const;
};

/// T = ceil(ln(100k) / gamma)
std::uint64_t pauli_sample_count(double gamma, int k);

/// Union of the supports of T Pauli samples.
QubitSet pauli_sample_relevant(UnitaryOracle& oracle, double gamma, int k);

struct PreparedCopies {
  std::vector<PostMeasurementState> copies;
  std::uint64_t attempts = 0;
};

/// Calls conditional_post_state up to `attempts` times, keeping the successes.
/// Stops early once `target` copies are collected (target 0: never).
PreparedCopies prepare_copies(UnitaryOracle& oracle, const QubitSet& subset, int k,
                              std::uint64_t attempts, std::uint64_t target = 0);

/// Reshapes amplitudes into W[i,j] = sqrt(K) psi[i K + j] and projects onto
/// the nearest unitary.
DenseUnitary state_to_unitary(const Vector& psi);

struct LearnedJunta {
  /// Sampled relevant qubits.
  QubitSet sampled;
  /// Core qubit j acts on ordered_support[j-1]: sampled qubits ascending, then
  /// the smallest unused indices.
  std::vector<int> ordered_support;
  DenseUnitary core;
  std::uint64_t copies = 0;
  std::uint64_t attempts = 0;
  QueryLedger cost;

  StructuredJunta junta(int n) const;
};

/// Learns a k-junta to distance eps. Throws InsufficientCopies when the
/// preparation stage falls short, InvalidArgument when more than k relevant
/// qubits are sampled.
LearnedJunta junta_learner(UnitaryOracle& oracle, const LearnerParams& params);

/// Modeled query total of junta_learner: T + 10t.
std::uint64_t junta_learner_modeled_cost(const LearnerParams& params);

}  // namespace qjunta
