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

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace qjunta {

/// A set of 1-based qubit indices, kept sorted and free of duplicates.
///
/// Qubit 1 is the most significant tensor factor: in a computational basis
/// index of an n-qubit register, qubit q lives at bit position n - q.
class QubitSet {
 public:
  QubitSet() = default;
  QubitSet(std::initializer_list<int> qubits);
  explicit QubitSet(std::vector<int> qubits);

  /// {1, ..., n}
  static QubitSet all(int n);

  bool empty() const noexcept { return qubits_.empty(); }
  std::size_t size() const noexcept { return qubits_.size(); }
  bool contains(int qubit) const noexcept;
  bool intersects(const QubitSet& other) const noexcept;
  bool is_subset_of(const QubitSet& other) const noexcept;
  int max() const noexcept { return qubits_.empty() ? 0 : qubits_.back(); }

  /// [n] \ this
  QubitSet complement(int n) const;
  QubitSet united(const QubitSet& other) const;
  QubitSet minus(const QubitSet& other) const;
  void insert(int qubit);

  const std::vector<int>& indices() const noexcept { return qubits_; }
  auto begin() const noexcept { return qubits_.begin(); }
  auto end() const noexcept { return qubits_.end(); }
  int operator[](std::size_t i) const { return qubits_[i]; }

  std::string to_string() const;

  friend auto operator<=>(const QubitSet&, const QubitSet&) = default;

 private:
  std::vector<int> qubits_;
};

/// Throws InvalidArgument unless every member lies in [1, n].
void check_within(const QubitSet& set, int n);

}  // namespace qjunta
