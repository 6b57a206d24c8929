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

#include "qjunta/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "qjunta/errors.hpp"

namespace qjunta {

Matrix PostMeasurementState::encoded_operator() const { return reconstruct(coefficients); }

Vector PostMeasurementState::amplitudes() const {
  return cj_state(encoded_operator()).amplitudes;
}

double detail::OracleAccess::true_success_probability(const UnitaryOracle& oracle,
                                                      const QubitSet& subset) {
  return oracle.true_success_probability(subset);
}

UnitaryOracle::UnitaryOracle(const Unitary& hidden, std::uint64_t seed)
    : n_(hidden.qubits()), spectrum_(hidden.spectrum()), rng_(seed) {
  require(n_ <= 64, ErrorCode::LimitExceeded, "oracle supports at most 64 qubits");
  double acc = 0.0;
  std::map<std::uint64_t, double> by_support;
  for (const auto& [x, c] : spectrum_.terms()) {
    const double w = std::norm(c);
    acc += w;
    strings_.push_back(x);
    cumulative_.push_back(acc);
    std::uint64_t mask = 0;
    for (int q = 1; q <= n_; ++q)
      if (x[q] != Pauli::I) mask |= std::uint64_t{1} << (q - 1);
    by_support[mask] += w;
  }
  require(!strings_.empty(), ErrorCode::InvalidArgument, "hidden operator has an empty spectrum");
  support_weights_.assign(by_support.begin(), by_support.end());
}

PauliString UnitaryOracle::pauli_sample() {
  ledger_.simulated_u += 1;
  std::uniform_real_distribution<double> uniform(0.0, cumulative_.back());
  const double u = uniform(rng_);
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) --it;
  return strings_[static_cast<std::size_t>(it - cumulative_.begin())];
}

BellOutcome UnitaryOracle::bell_outcome_on(const QubitSet& subset) {
  require(!subset.empty(), ErrorCode::InvalidArgument, "Bell measurement needs a nonempty set");
  check_within(subset, n_);
  const PauliString x = pauli_sample();
  BellOutcome out;
  out.letters = x.restricted_to(subset);
  out.all_identity = out.letters.is_identity();
  return out;
}

std::optional<PostMeasurementState> UnitaryOracle::conditional_post_state(const QubitSet& subset,
                                                                          int k) {
  check_within(subset, n_);
  require(static_cast<int>(subset.size()) <= k, ErrorCode::InvalidArgument,
          "retained set larger than k");
  const PauliString x = pauli_sample();
  if (x.support_intersects(subset.complement(n_))) return std::nullopt;

  const auto key = std::make_pair(subset, k);
  if (auto it = post_state_cache_.find(key); it != post_state_cache_.end()) return it->second;

  const PauliSpectrum kept = restrict_support(spectrum_, subset);
  const double weight = kept.weight();
  // weight > 0 here: the sampled x itself is supported inside `subset`.
  PostMeasurementState state;
  state.k = k;
  state.retained = subset;
  state.alpha = 1.0 / std::sqrt(weight);
  state.coefficients = PauliSpectrum(k);
  const int s = static_cast<int>(subset.size());
  for (const auto& [y, c] : kept.terms()) {
    PauliString padded(k);
    for (int j = 1; j <= s; ++j) padded.set(j, y[j]);
    state.coefficients.add(padded, c * state.alpha);
  }
  post_state_cache_.emplace(key, state);
  return state;
}

std::uint64_t UnitaryOracle::mask_of(const QubitSet& subset) const {
  std::uint64_t mask = 0;
  for (int q : subset) mask |= std::uint64_t{1} << (q - 1);
  return mask;
}

double UnitaryOracle::true_success_probability(const QubitSet& subset) const {
  check_within(subset, n_);
  const std::uint64_t mask = mask_of(subset);
  double inf = 0.0;
  for (const auto& [support, w] : support_weights_)
    if (support & mask) inf += w;
  return std::min(inf, 1.0);
}

}  // namespace qjunta
