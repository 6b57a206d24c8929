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
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qjunta/linalg.hpp"
#include "qjunta/qubits.hpp"

namespace qjunta {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Pauli p) noexcept;

/// A string x in Z_4^n, letter q (1-based) acting on qubit q.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int n) : letters_(static_cast<std::size_t>(n), Pauli::I) {}
  explicit PauliString(std::vector<Pauli> letters) : letters_(std::move(letters)) {}

  /// Parses "IXYZ"-style text; throws Parse on any other character.
  static PauliString parse(std::string_view text);

  /// Decodes the base-4 index used to enumerate Z_4^n, letter 1 most significant.
  static PauliString from_index(std::uint64_t index, int n);

  int size() const noexcept { return static_cast<int>(letters_.size()); }
  Pauli operator[](int qubit) const { return letters_[static_cast<std::size_t>(qubit - 1)]; }
  void set(int qubit, Pauli p) { letters_[static_cast<std::size_t>(qubit - 1)] = p; }

  bool is_identity() const noexcept;
  /// supp(x) = {q : x_q != I}
  QubitSet support() const;
  bool support_intersects(const QubitSet& set) const;
  /// Letters on the given qubits, in ascending qubit order.
  PauliString restricted_to(const QubitSet& qubits) const;
  std::string to_string() const;

  const std::vector<Pauli>& letters() const noexcept { return letters_; }

  friend auto operator<=>(const PauliString&, const PauliString&) = default;

 private:
  std::vector<Pauli> letters_;
};

/// Pauli coefficients of an operator on n qubits. Only nonzero coefficients are
/// stored; iteration order is the lexicographic order of the strings, so every
/// sampler built on top of it is deterministic for a fixed seed.
class PauliSpectrum {
 public:
  using Terms = std::map<PauliString, Complex>;

  /// Coefficients with magnitude below this are dropped by decompose().
  static constexpr double kCutoff = 1e-12;

  PauliSpectrum() = default;
  explicit PauliSpectrum(int n) : n_(n) {}
  PauliSpectrum(int n, Terms terms);

  int qubits() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  Complex coefficient(const PauliString& x) const;
  /// Adds to the coefficient of x; x must have exactly qubits() letters.
  void add(const PauliString& x, Complex value);

  /// sum_x |c(x)|^2
  double weight() const;

 private:
  int n_ = 0;
  Terms terms_;
};

/// sigma_x = sigma_{x_1} (x) ... (x) sigma_{x_n}
Matrix pauli_matrix(const PauliString& x);

/// Coefficients c(x) = Tr(sigma_x A) / N so that A = sum_x c(x) sigma_x.
PauliSpectrum decompose(const Matrix& a);

/// sum_x c(x) sigma_x
Matrix reconstruct(const PauliSpectrum& s);

/// D_i: keeps the coefficients with x_i != I.
PauliSpectrum derivative(const PauliSpectrum& s, int qubit);

/// Inf_S = sum over x with supp(x) meeting S of |c(x)|^2.
double influence(const PauliSpectrum& s, const QubitSet& subset);

/// sum_x conj(a(x)) b(x), which equals <A, B> / N.
Complex inner_product(const PauliSpectrum& a, const PauliSpectrum& b);

/// Lifts a spectrum on |support| qubits to n qubits: letter j of each string
/// moves to qubit support[j], every other qubit gets I.
PauliSpectrum embed(const PauliSpectrum& s, const QubitSet& support, int n);

/// Keeps only the strings supported inside `qubits` and re-indexes them onto
/// |qubits| letters (ascending order).
PauliSpectrum restrict_support(const PauliSpectrum& s, const QubitSet& qubits);

}  // namespace qjunta
