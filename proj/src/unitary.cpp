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

#include "qjunta/unitary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "qjunta/errors.hpp"

namespace qjunta {

const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

namespace {

using Index = Eigen::Index;

// Bit masks of the given qubits inside an n-qubit basis index, in ascending
// qubit order.
std::vector<std::uint64_t> masks_of(const QubitSet& qubits, int n) {
  std::vector<std::uint64_t> out;
  out.reserve(qubits.size());
  for (int q : qubits) out.push_back(std::uint64_t{1} << bit_of(q, n));
  return out;
}

// Places the |masks| low bits of `value` (most significant first) on `masks`.
std::uint64_t scatter(std::uint64_t value, const std::vector<std::uint64_t>& masks) {
  std::uint64_t out = 0;
  const std::size_t m = masks.size();
  for (std::size_t j = 0; j < m; ++j)
    if ((value >> (m - 1 - j)) & 1u) out |= masks[j];
  return out;
}

}  // namespace

DenseUnitary::DenseUnitary(Matrix m, const Limits& limits) : m_(std::move(m)) {
  n_ = qubits_of(m_);
  require(n_ >= 0, ErrorCode::DimensionMismatch, "unitary must be 2^n x 2^n");
  require(n_ <= std::max(limits.max_dense_qubits, limits.max_core_qubits),
          ErrorCode::LimitExceeded, "dense unitary exceeds qubit cap");
  require(is_unitary(m_, kTolerance), ErrorCode::InvalidArgument,
          "matrix is not unitary within 1e-9");
}

DenseUnitary DenseUnitary::identity(int n) {
  const auto d = static_cast<Index>(dim_of(n));
  return DenseUnitary(Matrix::Identity(d, d));
}

StructuredJunta::StructuredJunta(int n, QubitSet support, DenseUnitary core,
                                 const Limits& limits)
    : n_(n), support_(std::move(support)), core_(std::move(core)) {
  require(n >= 1 && n <= limits.max_total_qubits, ErrorCode::LimitExceeded,
          "junta qubit count outside [1, " + std::to_string(limits.max_total_qubits) + "]");
  check_within(support_, n);
  require(static_cast<int>(support_.size()) == core_.qubits(), ErrorCode::DimensionMismatch,
          "junta core must act on exactly |support| qubits");
  require(core_.qubits() <= limits.max_core_qubits, ErrorCode::LimitExceeded,
          "junta core exceeds qubit cap");
}

StructuredJunta StructuredJunta::from_ordered(int n, const std::vector<int>& ordered_support,
                                              const DenseUnitary& core, const Limits& limits) {
  QubitSet sorted(ordered_support);
  require(sorted.size() == ordered_support.size(), ErrorCode::InvalidArgument,
          "junta support has duplicate qubits");
  std::vector<int> order;
  order.reserve(ordered_support.size());
  for (int q : ordered_support) {
    auto pos = std::lower_bound(sorted.begin(), sorted.end(), q) - sorted.begin();
    order.push_back(static_cast<int>(pos) + 1);
  }
  return StructuredJunta(n, std::move(sorted), DenseUnitary(permute_qubits(core.matrix(), order)),
                         limits);
}

PauliSpectrum StructuredJunta::spectrum() const {
  return embed(core_.spectrum(), support_, n_);
}

StructuredJunta StructuredJunta::widened(const QubitSet& support) const {
  require(support_.is_subset_of(support), ErrorCode::InvalidArgument,
          "widened support must contain the current support");
  if (support == support_) return *this;
  // V on the old support tensored with identity, laid out on the new support.
  const int m = static_cast<int>(support.size());
  QubitSet local;
  for (std::size_t j = 0; j < support.size(); ++j)
    if (support_.contains(support[j])) local.insert(static_cast<int>(j) + 1);
  const std::vector<std::uint64_t> in = masks_of(local, m);
  const std::vector<std::uint64_t> out = masks_of(local.complement(m), m);
  const auto d = static_cast<Index>(dim_of(m));
  const std::uint64_t core_dim = dim_of(core_.qubits());
  Matrix w = Matrix::Zero(d, d);
  for (std::uint64_t rest = 0; rest < dim_of(m - core_.qubits()); ++rest) {
    const std::uint64_t base = scatter(rest, out);
    for (std::uint64_t r = 0; r < core_dim; ++r)
      for (std::uint64_t c = 0; c < core_dim; ++c)
        w(static_cast<Index>(base | scatter(r, in)), static_cast<Index>(base | scatter(c, in))) =
            core_.matrix()(static_cast<Index>(r), static_cast<Index>(c));
  }
  Limits wide;
  wide.max_core_qubits = std::max(m, wide.max_core_qubits);
  return StructuredJunta(n_, support, DenseUnitary(std::move(w), wide), wide);
}

Matrix StructuredJunta::to_dense(const Limits& limits) const {
  require(n_ <= limits.max_dense_qubits, ErrorCode::LimitExceeded,
          "junta too large to expand densely");
  return widened(QubitSet::all(n_)).core().matrix();
}

int Unitary::qubits() const {
  return std::visit([](const auto& u) { return u.qubits(); }, rep_);
}

PauliSpectrum Unitary::spectrum() const {
  return std::visit([](const auto& u) { return u.spectrum(); }, rep_);
}

Matrix Unitary::to_dense(const Limits& limits) const {
  if (is_junta()) return junta().to_dense(limits);
  return dense().matrix();
}

Matrix partial_trace(const Matrix& a, const QubitSet& traced) {
  const int n = qubits_of(a);
  require(n >= 0, ErrorCode::DimensionMismatch, "partial trace needs a 2^n x 2^n matrix");
  check_within(traced, n);
  const QubitSet kept = traced.complement(n);
  const auto in = masks_of(traced, n);
  const auto out = masks_of(kept, n);
  const std::uint64_t kept_dim = dim_of(static_cast<int>(kept.size()));
  const std::uint64_t traced_dim = dim_of(static_cast<int>(traced.size()));
  Matrix r = Matrix::Zero(static_cast<Index>(kept_dim), static_cast<Index>(kept_dim));
  for (std::uint64_t i = 0; i < kept_dim; ++i) {
    const std::uint64_t ri = scatter(i, out);
    for (std::uint64_t j = 0; j < kept_dim; ++j) {
      const std::uint64_t rj = scatter(j, out);
      Complex acc{};
      for (std::uint64_t k = 0; k < traced_dim; ++k) {
        const std::uint64_t sk = scatter(k, in);
        acc += a(static_cast<Index>(ri | sk), static_cast<Index>(rj | sk));
      }
      r(static_cast<Index>(i), static_cast<Index>(j)) = acc;
    }
  }
  return r;
}

double influence_via_partial_trace(const Matrix& u, const QubitSet& subset) {
  const int n = qubits_of(u);
  require(n >= 0, ErrorCode::DimensionMismatch, "influence needs a 2^n x 2^n matrix");
  const Matrix t = partial_trace(u, subset);
  const Matrix tdag = partial_trace(u.adjoint(), subset);
  const double tr = (tdag * t).trace().real();
  return 1.0 - tr / std::ldexp(1.0, n + static_cast<int>(subset.size()));
}

double dist(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols() && a.rows() == a.cols(),
          ErrorCode::DimensionMismatch, "dist needs square matrices of equal size");
  const double n = static_cast<double>(a.rows());
  const Complex overlap = a.conjugate().cwiseProduct(b).sum();
  const double d2 = (a.squaredNorm() + b.squaredNorm()) / (2.0 * n) - std::abs(overlap) / n;
  return std::sqrt(std::max(d2, 0.0));
}

double dist(const Unitary& a, const Unitary& b, const Limits& limits) {
  require(a.qubits() == b.qubits(), ErrorCode::DimensionMismatch,
          "dist between unitaries on different qubit counts");
  if (a.is_junta() && b.is_junta()) {
    const QubitSet joint = a.junta().support().united(b.junta().support());
    require(static_cast<int>(joint.size()) <= 2 * limits.max_core_qubits,
            ErrorCode::LimitExceeded, "junta supports too large to compare");
    if (joint.empty()) return 0.0;
    // Both act as identity off `joint`, and dist(V1 (x) I, V2 (x) I) = dist(V1, V2).
    return dist(a.junta().widened(joint).core().matrix(),
                b.junta().widened(joint).core().matrix());
  }
  return dist(a.to_dense(limits), b.to_dense(limits));
}

CJState cj_state(const Matrix& u) {
  const int n = qubits_of(u);
  require(n >= 0, ErrorCode::DimensionMismatch, "CJ state needs a 2^n x 2^n matrix");
  const auto d = u.rows();
  CJState s;
  s.n = n;
  s.amplitudes.resize(d * d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) s.amplitudes(i * d + j) = u(i, j) * scale;
  return s;
}

CJState cj_state(const Unitary& u, const Limits& limits) { return cj_state(u.to_dense(limits)); }

DenseUnitary haar_random_unitary(int k, std::uint64_t seed) {
  require(k >= 1, ErrorCode::InvalidArgument, "Haar sampling needs k >= 1");
  require(k <= default_limits().max_dense_qubits, ErrorCode::LimitExceeded,
          "Haar sampling exceeds qubit cap");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto d = static_cast<Index>(dim_of(k));
  Matrix g(d, d);
  for (Index c = 0; c < d; ++c)
    for (Index r = 0; r < d; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = Complex(re, im);
    }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix& r = qr.matrixQR();
  for (Index j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    q.col(j) *= mag > 0 ? rjj / mag : Complex{1.0, 0.0};
  }
  // Re-orthonormalise away rounding so the 1e-9 unitarity check always holds.
  return DenseUnitary(polar_unitary(q));
}

DenseUnitary encode_boolean(const BooleanFunction& f) {
  require(f.inputs() <= default_limits().max_dense_qubits, ErrorCode::LimitExceeded,
          "Boolean encoding exceeds dense qubit cap");
  const auto d = static_cast<Index>(f.size());
  Matrix m = Matrix::Zero(d, d);
  for (Index i = 0; i < d; ++i) m(i, i) = f(static_cast<std::size_t>(i)) ? -1.0 : 1.0;
  return DenseUnitary(std::move(m));
}

Matrix permute_qubits(const Matrix& m, const std::vector<int>& order) {
  const int k = qubits_of(m);
  require(k >= 0 && static_cast<int>(order.size()) == k, ErrorCode::DimensionMismatch,
          "permutation size does not match qubit count");
  {
    std::vector<int> check = order;
    std::sort(check.begin(), check.end());
    std::vector<int> expect(order.size());
    std::iota(expect.begin(), expect.end(), 1);
    require(check == expect, ErrorCode::InvalidArgument, "not a qubit permutation");
  }
  const std::uint64_t d = dim_of(k);
  std::vector<std::uint64_t> target(d);
  for (std::uint64_t r = 0; r < d; ++r) {
    std::uint64_t t = 0;
    for (int j = 1; j <= k; ++j)
      if ((r >> bit_of(j, k)) & 1u) t |= std::uint64_t{1} << bit_of(order[j - 1], k);
    target[r] = t;
  }
  Matrix out(m.rows(), m.cols());
  for (std::uint64_t r = 0; r < d; ++r)
    for (std::uint64_t c = 0; c < d; ++c)
      out(static_cast<Index>(target[r]), static_cast<Index>(target[c])) =
          m(static_cast<Index>(r), static_cast<Index>(c));
  return out;
}

}  // namespace qjunta
