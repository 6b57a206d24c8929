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

// Slow textbook reference implementations used only by the tests. They share
// no code with the library's fast paths.

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ref {

using C = std::complex<double>;
using M = Eigen::MatrixXcd;

inline M pauli(char letter) {
  const C i{0.0, 1.0};
  M m(2, 2);
  switch (letter) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

inline M kron(const M& a, const M& b) {
  M out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline M pauli_string(const std::string& letters) {
  M out = M::Identity(1, 1);
  for (char c : letters) out = kron(out, pauli(c));
  return out;
}

inline std::vector<std::string> all_strings(int n) {
  std::vector<std::string> out{""};
  for (int q = 0; q < n; ++q) {
    std::vector<std::string> next;
    for (const auto& s : out)
      for (char c : std::string("IXYZ")) next.push_back(s + c);
    out = std::move(next);
  }
  return out;
}

// Tr(sigma_x U) / N
inline C coefficient(const M& u, const std::string& x) {
  return (pauli_string(x) * u).trace() / static_cast<double>(u.rows());
}

// Inf_S over 1-based qubits in S.
inline double influence(const M& u, const std::vector<int>& s) {
  const int n = static_cast<int>(std::lround(std::log2(static_cast<double>(u.rows()))));
  double total = 0.0;
  for (const auto& x : all_strings(n)) {
    bool hits = false;
    for (int q : s) hits = hits || x[static_cast<std::size_t>(q - 1)] != 'I';
    if (hits) total += std::norm(coefficient(u, x));
  }
  return total;
}

// sum_k (I (x) <k|) U (I (x) |k>) with the traced qubits anywhere.
inline M partial_trace(const M& u, const std::vector<int>& traced) {
  const int n = static_cast<int>(std::lround(std::log2(static_cast<double>(u.rows()))));
  std::vector<int> kept;
  for (int q = 1; q <= n; ++q) {
    bool t = false;
    for (int s : traced) t = t || s == q;
    if (!t) kept.push_back(q);
  }
  const int dk = 1 << kept.size();
  const int dt = 1 << traced.size();
  auto index = [&](int kept_bits, int traced_bits) {
    int idx = 0;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if ((kept_bits >> (kept.size() - 1 - j)) & 1) idx |= 1 << (n - kept[j]);
    for (std::size_t j = 0; j < traced.size(); ++j)
      if ((traced_bits >> (traced.size() - 1 - j)) & 1) idx |= 1 << (n - traced[j]);
    return idx;
  };
  M out = M::Zero(dk, dk);
  for (int a = 0; a < dk; ++a)
    for (int b = 0; b < dk; ++b)
      for (int t = 0; t < dt; ++t) out(a, b) += u(index(a, t), index(b, t));
  return out;
}

// min over theta of ||e^{i theta} A - B|| / sqrt(2N), scanning `steps` angles.
inline double dist_scan(const M& a, const M& b, int steps) {
  double best = 1e300;
  for (int s = 0; s < steps; ++s) {
    const double t = 2.0 * std::numbers::pi * s / steps;
    best = std::min(best, (std::polar(1.0, t) * a - b).norm());
  }
  return best / std::sqrt(2.0 * static_cast<double>(a.rows()));
}

inline M cnot() {
  M m = M::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
  return m;
}

inline M hadamard() {
  M m(2, 2);
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}

inline M diag_signs(const std::string& truth_table) {
  M m = M::Zero(static_cast<int>(truth_table.size()), static_cast<int>(truth_table.size()));
  for (std::size_t i = 0; i < truth_table.size(); ++i)
    m(static_cast<int>(i), static_cast<int>(i)) = truth_table[i] == '1' ? -1.0 : 1.0;
  return m;
}

}  // namespace ref
