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

#include "qjunta/qubits.hpp"

#include <algorithm>
#include <iterator>

#include "qjunta/errors.hpp"

namespace qjunta {

QubitSet::QubitSet(std::initializer_list<int> qubits) : QubitSet(std::vector<int>(qubits)) {}

QubitSet::QubitSet(std::vector<int> qubits) : qubits_(std::move(qubits)) {
  std::sort(qubits_.begin(), qubits_.end());
  qubits_.erase(std::unique(qubits_.begin(), qubits_.end()), qubits_.end());
}

QubitSet QubitSet::all(int n) {
  std::vector<int> q(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) q[static_cast<std::size_t>(i)] = i + 1;
  return QubitSet(std::move(q));
}

bool QubitSet::contains(int qubit) const noexcept {
  return std::binary_search(qubits_.begin(), qubits_.end(), qubit);
}

bool QubitSet::intersects(const QubitSet& other) const noexcept {
  auto a = qubits_.begin();
  auto b = other.qubits_.begin();
  while (a != qubits_.end() && b != other.qubits_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

bool QubitSet::is_subset_of(const QubitSet& other) const noexcept {
  return std::includes(other.qubits_.begin(), other.qubits_.end(), qubits_.begin(),
                       qubits_.end());
}

QubitSet QubitSet::complement(int n) const { return all(n).minus(*this); }

QubitSet QubitSet::united(const QubitSet& other) const {
  std::vector<int> out;
  std::set_union(qubits_.begin(), qubits_.end(), other.qubits_.begin(), other.qubits_.end(),
                 std::back_inserter(out));
  return QubitSet(std::move(out));
}

QubitSet QubitSet::minus(const QubitSet& other) const {
  std::vector<int> out;
  std::set_difference(qubits_.begin(), qubits_.end(), other.qubits_.begin(),
                      other.qubits_.end(), std::back_inserter(out));
  return QubitSet(std::move(out));
}

void QubitSet::insert(int qubit) {
  auto it = std::lower_bound(qubits_.begin(), qubits_.end(), qubit);
  if (it == qubits_.end() || *it != qubit) qubits_.insert(it, qubit);
}

std::string QubitSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < qubits_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(qubits_[i]);
  }
  return s + "}";
}

void check_within(const QubitSet& set, int n) {
  for (int q : set) {
    require(q >= 1 && q <= n, ErrorCode::InvalidArgument,
            "qubit index " + std::to_string(q) + " outside [1, " + std::to_string(n) + "]");
  }
}

}  // namespace qjunta
