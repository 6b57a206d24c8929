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

#include "qjunta/linalg.hpp"

#include <bit>

namespace qjunta {

int qubits_of(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) return -1;
  const auto side = static_cast<std::uint64_t>(m.rows());
  if (!std::has_single_bit(side)) return -1;
  return std::countr_zero(side);
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const Matrix gram = m.adjoint() * m;
  const Matrix id = Matrix::Identity(m.rows(), m.cols());
  return (gram - id).cwiseAbs().maxCoeff() <= tol;
}

Matrix polar_unitary(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace qjunta
