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

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace qjunta {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// 2^n for small n.
inline std::size_t dim_of(int qubits) { return std::size_t{1} << qubits; }

/// Bit position of 1-based qubit q inside a basis index of an n-qubit register.
inline int bit_of(int qubit, int n) { return n - qubit; }

/// Number of qubits of a 2^n x 2^n matrix; -1 when the matrix is not square or
/// its side is not a power of two.
int qubits_of(const Matrix& m);

bool is_unitary(const Matrix& m, double tol = 1e-9);

/// Nearest unitary in Hilbert-Schmidt norm: U S V^dagger -> U V^dagger.
Matrix polar_unitary(const Matrix& m);

}  // namespace qjunta
