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
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "qjunta/pauli.hpp"
#include "qjunta/qubits.hpp"
#include "qjunta/unitary.hpp"

namespace qjunta {

/// Dual query accounting. The simulated counters record oracle applications the
/// simulator actually performed (or, inside amplitude amplification, the forward
/// and inverse applications of the amplified circuit); `modeled_quantum` records
/// the query budget the quantum algorithm is charged.
struct QueryLedger {
  std::uint64_t simulated_u = 0;
  std::uint64_t simulated_u_dagger = 0;
  std::uint64_t modeled_quantum = 0;

  QueryLedger& operator+=(const QueryLedger& other) {
    simulated_u += other.simulated_u;
    simulated_u_dagger += other.simulated_u_dagger;
    modeled_quantum += other.modeled_quantum;
    return *this;
  }
  friend QueryLedger operator-(QueryLedger a, const QueryLedger& b) {
    a.simulated_u -= b.simulated_u;
    a.simulated_u_dagger -= b.simulated_u_dagger;
    a.modeled_quantum -= b.modeled_quantum;
    return a;
  }
  friend bool operator==(const QueryLedger&, const QueryLedger&) = default;
};

/// The 2k-qubit state left after a successful all-identity outcome on the
/// complement of `retained`: pairs for the retained qubits (ascending) followed
/// by k - |retained| EPR pairs. Stored by its Pauli coefficients, so the state
/// is |v(M)> with M = sum_x c(x) sigma_x on k qubits.
struct PostMeasurementState {
  int k = 0;
  QubitSet retained;
  PauliSpectrum coefficients;
  /// 1 / sqrt(1 - Inf_{complement}[U]): the renormalisation applied.
  double alpha = 1.0;

  /// M = sum_x c(x) sigma_x (a 2^k x 2^k matrix).
  Matrix encoded_operator() const;
  /// Amplitudes of |v(M)>, basis index i * 2^k + j.
  Vector amplitudes() const;
};

/// Result of a Bell-basis measurement on the pairs of a subset S.
struct BellOutcome {
  bool all_identity = true;
  /// Measured letters on S (ascending qubit order).
  PauliString letters;
};

class UnitaryOracle;

namespace detail {
/// Privileged access for the amplitude-amplification bookkeeping; never part
/// of what an algorithm may observe.
struct OracleAccess {
  static double true_success_probability(const UnitaryOracle& oracle, const QubitSet& subset);
};
}  // namespace detail

/// Black-box handle over a hidden unitary. Algorithms only see measurement
/// outcomes of the CJ state; each sampling call charges one U query.
///
/// Bell-basis statistics of |v(U)> are exactly {|U^(x)|^2}, so every
/// measurement is simulated by drawing a full Pauli string from the cached
/// spectrum and then marginalising or conditioning.
class UnitaryOracle {
 public:
  UnitaryOracle(const Unitary& hidden, std::uint64_t seed);

  int qubits() const noexcept { return n_; }

  /// Draws x with probability |U^(x)|^2.
  PauliString pauli_sample();
  /// Measures the pairs of S in the Bell basis.
  BellOutcome bell_outcome_on(const QubitSet& subset);
  /// Measures the pairs of [n] \ S; on the all-identity outcome returns the
  /// renormalised state on S padded to k pairs, otherwise std::nullopt.
  std::optional<PostMeasurementState> conditional_post_state(const QubitSet& subset, int k);

  const QueryLedger& ledger() const noexcept { return ledger_; }
  void charge(const QueryLedger& cost) { ledger_ += cost; }

  /// The trial's random stream, shared by the algorithms driving this oracle.
  std::mt19937_64& rng() noexcept { return rng_; }

 private:
  friend struct detail::OracleAccess;

  double true_success_probability(const QubitSet& subset) const;
  std::uint64_t mask_of(const QubitSet& subset) const;

  int n_ = 0;
  PauliSpectrum spectrum_;
  std::vector<PauliString> strings_;
  std::vector<double> cumulative_;
  // Total weight per distinct support bitmask (bit q-1 for qubit q).
  std::vector<std::pair<std::uint64_t, double>> support_weights_;
  std::mt19937_64 rng_;
  QueryLedger ledger_;
  std::map<std::pair<QubitSet, int>, PostMeasurementState> post_state_cache_;
};

}  // namespace qjunta
