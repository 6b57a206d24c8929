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

#include "qjunta/learning.hpp"

#include <cmath>
#include <string>

#include "qjunta/errors.hpp"

namespace qjunta {

void LearnerParams::validate() const {
  require(k >= 1, ErrorCode::InvalidArgument, "learner needs k >= 1");
  require(eps > 0.0 && eps <= 1.0, ErrorCode::InvalidArgument, "learner needs eps in (0, 1]");
  require(c_l > 0.0 && c_t > 0.0, ErrorCode::InvalidArgument,
          "calibration constants must be positive");
}

double LearnerParams::gamma() const { return eps * eps / (4.0 * k); }

std::uint64_t LearnerParams::copies_target() const {
  return static_cast<std::uint64_t>(std::ceil(c_l * std::ldexp(1.0, 2 * k) / (eps * eps) - 1e-9));
}

double LearnerParams::tomography_error() const { return eps * eps / 4.0; }

std::uint64_t pauli_sample_count(double gamma, int k) {
  require(gamma > 0.0 && gamma <= 1.0, ErrorCode::InvalidArgument, "gamma must lie in (0, 1]");
  require(k >= 1, ErrorCode::InvalidArgument, "Pauli sampling needs k >= 1");
  return static_cast<std::uint64_t>(std::ceil(std::log(100.0 * k) / gamma - 1e-9));
}

QubitSet pauli_sample_relevant(UnitaryOracle& oracle, double gamma, int k) {
  const std::uint64_t samples = pauli_sample_count(gamma, k);
  QubitSet found;
  for (std::uint64_t t = 0; t < samples; ++t) found = found.united(oracle.pauli_sample().support());
  return found;
}

PreparedCopies prepare_copies(UnitaryOracle& oracle, const QubitSet& subset, int k,
                              std::uint64_t attempts, std::uint64_t target) {
  PreparedCopies out;
  while (out.attempts < attempts && (target == 0 || out.copies.size() < target)) {
    ++out.attempts;
    if (auto state = oracle.conditional_post_state(subset, k)) out.copies.push_back(*std::move(state));
  }
  return out;
}

DenseUnitary state_to_unitary(const Vector& psi) {
  const int qubits = static_cast<int>(std::lround(std::log2(static_cast<double>(psi.size()))));
  require(qubits >= 2 && qubits % 2 == 0 && dim_of(qubits) == static_cast<std::size_t>(psi.size()),
          ErrorCode::DimensionMismatch, "expected a state on 2k qubits");
  const auto dim = static_cast<Eigen::Index>(dim_of(qubits / 2));
  Matrix w(dim, dim);
  const double scale = std::sqrt(static_cast<double>(dim));
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) w(i, j) = scale * psi(i * dim + j);
  require(w.norm() > 1e-12, ErrorCode::Internal, "cannot unitarize the zero matrix");
  return DenseUnitary(polar_unitary(w));
}

StructuredJunta LearnedJunta::junta(int n) const {
  return StructuredJunta::from_ordered(n, ordered_support, core);
}

LearnedJunta junta_learner(UnitaryOracle& oracle, const LearnerParams& params) {
  params.validate();
  const int n = oracle.qubits();
  require(params.k <= n, ErrorCode::InvalidArgument, "k exceeds the number of qubits");
  const QueryLedger start = oracle.ledger();

  QueryLedger modeled;
  modeled.modeled_quantum = junta_learner_modeled_cost(params);
  oracle.charge(modeled);

  LearnedJunta learned;
  learned.sampled = pauli_sample_relevant(oracle, params.gamma(), params.k);
  require(static_cast<int>(learned.sampled.size()) <= params.k, ErrorCode::InvalidArgument,
          "sampled " + std::to_string(learned.sampled.size()) +
              " relevant qubits, more than k; the instance is not a k-junta");

  const std::uint64_t t = params.copies_target();
  PreparedCopies prepared = prepare_copies(oracle, learned.sampled, params.k, 10 * t, t);
  learned.attempts = prepared.attempts;
  learned.copies = prepared.copies.size();
  if (prepared.copies.size() < t) {
    fail(ErrorCode::InsufficientCopies,
         "obtained " + std::to_string(prepared.copies.size()) + " of " + std::to_string(t) +
             " copies in " + std::to_string(prepared.attempts) + " attempts");
  }

  const TomographyResult estimate = tomography(prepared.copies, params.tomography_error(),
                                               params.backend, params.c_t, oracle.rng());
  learned.core = state_to_unitary(estimate.state);

  learned.ordered_support = learned.sampled.indices();
  for (int q = 1; static_cast<int>(learned.ordered_support.size()) < params.k; ++q)
    if (!learned.sampled.contains(q)) learned.ordered_support.push_back(q);
  learned.cost = oracle.ledger() - start;
  return learned;
}

std::uint64_t junta_learner_modeled_cost(const LearnerParams& params) {
  params.validate();
  return pauli_sample_count(params.gamma(), params.k) + 10 * params.copies_target();
}

}  // namespace qjunta
