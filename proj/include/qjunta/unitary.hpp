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
#include <variant>
#include <vector>

#include "qjunta/boolean.hpp"
#include "qjunta/linalg.hpp"
#include "qjunta/pauli.hpp"
#include "qjunta/qubits.hpp"

namespace qjunta {

/// Size caps for operations that materialise 2^n x 2^n matrices.
struct Limits {
  int max_dense_qubits = 8;
  int max_core_qubits = 8;
  int max_total_qubits = 64;
};

const Limits& default_limits();

/// A full 2^n x 2^n unitary. Construction checks U^dagger U = I to 1e-9.
class DenseUnitary {
 public:
  static constexpr double kTolerance = 1e-9;

  DenseUnitary() = default;
  explicit DenseUnitary(Matrix m, const Limits& limits = default_limits());

  static DenseUnitary identity(int n);

  int qubits() const noexcept { return n_; }
  const Matrix& matrix() const noexcept { return m_; }
  PauliSpectrum spectrum() const { return decompose(m_); }

 private:
  int n_ = 0;
  Matrix m_;
};

/// V_S (x) I on n qubits. The core acts on |S| qubits; core qubit j corresponds
/// to the j-th smallest member of the support.
class StructuredJunta {
 public:
  StructuredJunta() = default;
  StructuredJunta(int n, QubitSet support, DenseUnitary core,
                  const Limits& limits = default_limits());
  /// Support given in core order (core qubit j acts on ordered_support[j-1]);
  /// the core is permuted so the stored support is ascending.
  static StructuredJunta from_ordered(int n, const std::vector<int>& ordered_support,
                                      const DenseUnitary& core,
                                      const Limits& limits = default_limits());

  int qubits() const noexcept { return n_; }
  const QubitSet& support() const noexcept { return support_; }
  const DenseUnitary& core() const noexcept { return core_; }

  /// Core spectrum lifted to n qubits; off-support letters are always I.
  PauliSpectrum spectrum() const;
  /// The same operator as a junta on a larger support (must contain support()).
  StructuredJunta widened(const QubitSet& support) const;
  Matrix to_dense(const Limits& limits = default_limits()) const;

 private:
  int n_ = 0;
  QubitSet support_;
  DenseUnitary core_;
};

/// Either representation of a hidden unitary.
class Unitary {
 public:
  Unitary() = default;
  Unitary(DenseUnitary u) : rep_(std::move(u)) {}
  Unitary(StructuredJunta u) : rep_(std::move(u)) {}

  int qubits() const;
  bool is_junta() const noexcept { return std::holds_alternative<StructuredJunta>(rep_); }
  const DenseUnitary& dense() const { return std::get<DenseUnitary>(rep_); }
  const StructuredJunta& junta() const { return std::get<StructuredJunta>(rep_); }

  PauliSpectrum spectrum() const;
  Matrix to_dense(const Limits& limits = default_limits()) const;

 private:
  std::variant<DenseUnitary, StructuredJunta> rep_;
};

/// Tr_S(A): traces out the qubits in S, leaving an operator on [n] \ S
/// (ascending qubit order).
Matrix partial_trace(const Matrix& a, const QubitSet& traced);

/// 1 - Tr((Tr_S U)^dagger (Tr_S U)) / 2^{n+|S|}
double influence_via_partial_trace(const Matrix& u, const QubitSet& subset);

/// min over theta of ||e^{i theta} A - B|| / sqrt(2N). For unitaries this is
/// sqrt(1 - |Tr(A^dagger B)| / N).
double dist(const Matrix& a, const Matrix& b);
/// Works on juntas of any n by comparing them on the union of their supports.
double dist(const Unitary& a, const Unitary& b, const Limits& limits = default_limits());

/// |v(U)> with amplitude U[i,j] / sqrt(N) at basis index i * N + j.
struct CJState {
  int n = 0;
  Vector amplitudes;
};

CJState cj_state(const Matrix& u);
CJState cj_state(const Unitary& u, const Limits& limits = default_limits());

/// Haar-distributed unitary on k qubits: QR of a complex Ginibre matrix with
/// the phases of diag(R) divided out.
DenseUnitary haar_random_unitary(int k, std::uint64_t seed);

/// diag((-1)^{f(x)})
DenseUnitary encode_boolean(const BooleanFunction& f);

/// Moves qubit j of `m` to position order[j-1] (both 1-based).
Matrix permute_qubits(const Matrix& m, const std::vector<int>& order);

}  // namespace qjunta
