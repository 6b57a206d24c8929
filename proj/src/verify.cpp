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

#include "qjunta/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "qjunta/errors.hpp"

namespace qjunta {

namespace {

constexpr double kTol = 1e-9;

void require_same_size(const BooleanFunction& f, const BooleanFunction& g) {
  require(f.inputs() == g.inputs(), ErrorCode::DimensionMismatch,
          "Boolean functions have different input counts");
}

// All k-subsets of [n], each ascending.
std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int q = next; q <= n; ++q) {
      cur.push_back(q);
      self(self, q + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

// Index of x restricted to `vars` (first listed variable most significant).
std::size_t restriction(const BooleanFunction& f, std::size_t x, const std::vector<int>& vars) {
  std::size_t r = 0;
  for (int v : vars) r = (r << 1) | (f.input_bit(x, v) ? 1u : 0u);
  return r;
}

BooleanFunction junta_from(int n, const std::vector<int>& vars, std::uint64_t h) {
  const BooleanFunction shape = BooleanFunction::constant(n, false);
  std::vector<std::uint8_t> table(shape.size());
  for (std::size_t x = 0; x < table.size(); ++x)
    table[x] = static_cast<std::uint8_t>((h >> restriction(shape, x, vars)) & 1u);
  return BooleanFunction(std::move(table));
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix single_pauli(int letter) {
  const Complex i{0.0, 1.0};
  Matrix m(2, 2);
  switch (letter) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -i, i, 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

}  // namespace

double boolean_distance(const BooleanFunction& f, const BooleanFunction& g) {
  require_same_size(f, g);
  std::size_t differ = 0;
  for (std::size_t x = 0; x < f.size(); ++x) differ += f(x) != g(x) ? 1 : 0;
  return static_cast<double>(differ) / static_cast<double>(f.size());
}

double distance_to_boolean_juntas(const BooleanFunction& f, int k) {
  const int n = f.inputs();
  require(n <= 6 && k >= 0 && k <= 2, ErrorCode::LimitExceeded,
          "brute-force junta distance supports n <= 6, k <= 2");
  if (k >= n) return 0.0;
  std::size_t best = f.size();
  for (const auto& vars : subsets_of_size(n, k)) {
    std::vector<std::size_t> ones(std::size_t{1} << k, 0), total(std::size_t{1} << k, 0);
    for (std::size_t x = 0; x < f.size(); ++x) {
      const std::size_t r = restriction(f, x, vars);
      ++total[r];
      ones[r] += f(x) ? 1 : 0;
    }
    std::size_t errors = 0;
    for (std::size_t r = 0; r < total.size(); ++r) errors += std::min(ones[r], total[r] - ones[r]);
    best = std::min(best, errors);
  }
  return static_cast<double>(best) / static_cast<double>(f.size());
}

double min_distance_to_encoded_juntas(const BooleanFunction& f, int k) {
  const int n = f.inputs();
  require(n <= 4 && k >= 1 && k <= 2 && k <= n, ErrorCode::LimitExceeded,
          "encoded junta enumeration supports n <= 4, 1 <= k <= 2");
  const Matrix uf = encode_boolean(f).matrix();
  double best = std::numeric_limits<double>::infinity();
  for (const auto& vars : subsets_of_size(n, k)) {
    const std::uint64_t functions = std::uint64_t{1} << (std::size_t{1} << k);
    for (std::uint64_t h = 0; h < functions; ++h)
      best = std::min(best, dist(uf, encode_boolean(junta_from(n, vars, h)).matrix()));
  }
  return best;
}

bool check_wang_lemma(const Matrix& u, int k, double eps) {
  const int n = qubits_of(u);
  require(n >= 1 && n <= 6, ErrorCode::LimitExceeded, "Wang check supports n <= 6");
  const PauliSpectrum s = decompose(u);
  const double bound = eps * eps / 4.0 - kTol;
  for (int size = 0; size <= std::min(k, n); ++size) {
    for (const auto& t : subsets_of_size(n, size)) {
      if (influence(s, QubitSet(t).complement(n)) < bound) return false;
    }
  }
  return true;
}

bool check_encoding_distance(const BooleanFunction& f, const BooleanFunction& g) {
  require_same_size(f, g);
  const double lhs = std::pow(dist(encode_boolean(f).matrix(), encode_boolean(g).matrix()), 2);
  const double p = boolean_distance(f, g);
  return std::abs(lhs - 2.0 * std::min(p, 1.0 - p)) <= kTol;
}

std::optional<bool> check_lb_no_case(const BooleanFunction& f, int k, double eps) {
  if (distance_to_boolean_juntas(f, k) < eps - 1e-12) return std::nullopt;
  return min_distance_to_encoded_juntas(f, k) >= std::sqrt(2.0 * eps) - kTol;
}

StructuralCheck check_structural_lemma(const StructuredJunta& v, const BooleanFunction& f) {
  const int n = v.qubits();
  const int k = static_cast<int>(v.support().size());
  require(k >= 1 && k <= 2, ErrorCode::LimitExceeded, "structural check supports k <= 2");
  require(f.inputs() == n, ErrorCode::DimensionMismatch, "f and V act on different qubit counts");

  const Matrix& core = v.core().matrix();
  const std::uint64_t functions = std::uint64_t{1} << (std::size_t{1} << k);
  std::uint64_t best_h = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t h = 0; h < functions; ++h) {
    Matrix d = Matrix::Zero(core.rows(), core.cols());
    for (Eigen::Index x = 0; x < d.rows(); ++x) d(x, x) = ((h >> x) & 1u) ? -1.0 : 1.0;
    const double value = dist(core, d);
    if (value < best - 1e-15) {
      best = value;
      best_h = h;
    }
  }

  StructuralCheck out;
  out.g = junta_from(n, v.support().indices(), best_h);
  const Matrix dense = v.to_dense();
  out.dist_to_g = dist(dense, encode_boolean(out.g).matrix());
  out.dist_to_f = dist(dense, encode_boolean(f).matrix());
  out.holds = out.dist_to_g <= out.dist_to_f + kTol;
  return out;
}

double exact_influence(const Matrix& u, const QubitSet& subset) {
  const int n = qubits_of(u);
  require(n >= 1 && n <= 6, ErrorCode::LimitExceeded, "exact influence supports n <= 6");
  check_within(subset, n);
  const double dim = static_cast<double>(u.rows());
  double total = 0.0;
  const std::uint64_t strings = std::uint64_t{1} << (2 * n);
  for (std::uint64_t idx = 0; idx < strings; ++idx) {
    Matrix sigma = Matrix::Identity(1, 1);
    bool touches = false;
    for (int q = 1; q <= n; ++q) {
      const int letter = static_cast<int>((idx >> (2 * (n - q))) & 3u);
      touches = touches || (letter != 0 && subset.contains(q));
      sigma = kron(sigma, single_pauli(letter));
    }
    if (!touches) continue;
    total += std::norm((sigma * u).trace() / dim);
  }
  return total;
}

double dist_grid(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::DimensionMismatch,
          "dist_grid needs equal shapes");
  const double dim = static_cast<double>(a.rows());
  const double na = a.squaredNorm();
  const double nb = b.squaredNorm();
  const Complex overlap = (b.conjugate().cwiseProduct(a)).sum();
  // ||e^{i t} A - B||^2 = |A|^2 + |B|^2 - 2 Re(e^{i t} <B, A>)
  auto objective = [&](double t) {
    const double sq = na + nb - 2.0 * (std::polar(1.0, t) * overlap).real();
    return std::sqrt(std::max(0.0, sq) / (2.0 * dim));
  };
  constexpr int kGrid = 100000;
  const double step = 2.0 * std::numbers::pi / kGrid;
  int best = 0;
  double best_value = objective(0.0);
  for (int i = 1; i < kGrid; ++i) {
    const double value = objective(i * step);
    if (value < best_value) {
      best_value = value;
      best = i;
    }
  }
  double lo = (best - 1) * step, hi = (best + 1) * step;
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
  double f1 = objective(x1), f2 = objective(x2);
  for (int it = 0; it < 100; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = objective(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = objective(x2);
    }
  }
  return std::min({best_value, f1, f2});
}

}  // namespace qjunta
