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

#include "qjunta/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "qjunta/errors.hpp"
#include "qjunta/pauli.hpp"

namespace qjunta {

const char* to_string(TomographyBackend backend) noexcept {
  return backend == TomographyBackend::Exact ? "exact" : "measurement";
}

TomographyBackend parse_backend(const std::string& name) {
  if (name == "exact") return TomographyBackend::Exact;
  if (name == "measurement") return TomographyBackend::Measurement;
  fail(ErrorCode::InvalidArgument, "unknown tomography backend '" + name + "'");
}

std::uint64_t tomography_copies(int k, double eps_prime, double c_t) {
  require(k >= 1, ErrorCode::InvalidArgument, "tomography needs k >= 1");
  require(eps_prime > 0.0 && eps_prime < 1.0, ErrorCode::InvalidArgument,
          "tomography error must lie in (0, 1)");
  require(c_t > 0.0, ErrorCode::InvalidArgument, "c_t must be positive");
  return static_cast<std::uint64_t>(std::ceil(c_t * std::ldexp(1.0, 2 * k) / eps_prime - 1e-9));
}

double fidelity(const Vector& a, const Vector& b) { return std::norm(a.dot(b)); }

namespace {

Vector measurement_estimate(const Vector& psi, int qubits, std::uint64_t shots_total,
                            std::mt19937_64& rng) {
  const std::uint64_t observables = (std::uint64_t{1} << (2 * qubits)) - 1;
  const std::uint64_t shots = std::max<std::uint64_t>(1, shots_total / observables);
  const auto d = static_cast<Eigen::Index>(dim_of(qubits));
  Matrix rho = Matrix::Identity(d, d);
  for (std::uint64_t idx = 1; idx <= observables; ++idx) {
    const Matrix p = pauli_matrix(PauliString::from_index(idx, qubits));
    const double e = std::clamp(psi.dot(p * psi).real(), -1.0, 1.0);
    std::binomial_distribution<std::uint64_t> plus(shots, (1.0 + e) / 2.0);
    const double e_hat = 2.0 * static_cast<double>(plus(rng)) / static_cast<double>(shots) - 1.0;
    rho += e_hat * p;
  }
  rho /= static_cast<double>(d);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho);
  Vector top = solver.eigenvectors().col(d - 1);
  return top / top.norm();
}

}  // namespace

TomographyResult tomography_of_state(const Vector& psi, std::uint64_t available, double eps_prime,
                                     TomographyBackend backend, double c_t,
                                     std::mt19937_64& rng) {
  const int qubits = static_cast<int>(std::lround(std::log2(static_cast<double>(psi.size()))));
  require(qubits >= 2 && qubits % 2 == 0 && dim_of(qubits) == static_cast<std::size_t>(psi.size()),
          ErrorCode::DimensionMismatch, "tomography expects a state on 2k qubits");
  const int k = qubits / 2;
  const std::uint64_t needed = tomography_copies(k, eps_prime, c_t);
  if (available < needed) {
    fail(ErrorCode::InsufficientCopies, "tomography needs " + std::to_string(needed) +
                                            " copies, got " + std::to_string(available));
  }
  TomographyResult result;
  result.copies_used = needed;
  if (backend == TomographyBackend::Exact) {
    result.state = psi / psi.norm();
    return result;
  }
  require(k <= kMeasurementBackendMaxK, ErrorCode::LimitExceeded,
          "measurement tomography supports k <= 2");
  result.state = measurement_estimate(psi / psi.norm(), qubits, needed, rng);
  return result;
}

TomographyResult tomography(const std::vector<PostMeasurementState>& copies, double eps_prime,
                            TomographyBackend backend, double c_t, std::mt19937_64& rng) {
  require(!copies.empty(), ErrorCode::InsufficientCopies, "tomography needs at least one copy");
  return tomography_of_state(copies.front().amplitudes(), copies.size(), eps_prime, backend, c_t,
                             rng);
}

}  // namespace qjunta
