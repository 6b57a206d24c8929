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
#include <string>
#include <vector>

#include "qjunta/linalg.hpp"
#include "qjunta/oracle.hpp"

namespace qjunta {

enum class TomographyBackend { Exact, Measurement };

const char* to_string(TomographyBackend backend) noexcept;
TomographyBackend parse_backend(const std::string& name);

/// Largest k the measurement backend accepts.
inline constexpr int kMeasurementBackendMaxK = 2;

/// Copies consumed to reach fidelity 1 - eps_prime: ceil(c_t 4^k / eps_prime).
std::uint64_t tomography_copies(int k, double eps_prime, double c_t);

struct TomographyResult {
  Vector state;  // unit vector on 2k qubits
  std::uint64_t copies_used = 0;
};

/// Estimates the common pure state of `copies`. Throws InsufficientCopies when
/// fewer than tomography_copies(k, eps_prime, c_t) are available.
///
/// Exact returns the true state. Measurement spreads the copies over the
/// 16^k - 1 non-identity Pauli observables on 2k qubits, estimates each
/// expectation from +-1 outcomes, rebuilds rho and keeps its top eigenvector.
TomographyResult tomography(const std::vector<PostMeasurementState>& copies, double eps_prime,
                            TomographyBackend backend, double c_t, std::mt19937_64& rng);

/// Same, given the state vector directly.
TomographyResult tomography_of_state(const Vector& psi, std::uint64_t available, double eps_prime,
                                     TomographyBackend backend, double c_t, std::mt19937_64& rng);

/// |<a|b>|^2
double fidelity(const Vector& a, const Vector& b);

}  // namespace qjunta
