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

#include "qjunta/pauli.hpp"

#include <bit>
#include <cmath>

#include "qjunta/errors.hpp"

namespace qjunta {

char to_char(Pauli p) noexcept {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

PauliString PauliString::parse(std::string_view text) {
  std::vector<Pauli> letters;
  letters.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'I': letters.push_back(Pauli::I); break;
      case 'X': letters.push_back(Pauli::X); break;
      case 'Y': letters.push_back(Pauli::Y); break;
      case 'Z': letters.push_back(Pauli::Z); break;
      default: fail(ErrorCode::Parse, "invalid Pauli letter '" + std::string(1, c) + "'");
    }
  }
  return PauliString(std::move(letters));
}

PauliString PauliString::from_index(std::uint64_t index, int n) {
  PauliString x(n);
  for (int q = n; q >= 1; --q) {
    x.set(q, static_cast<Pauli>(index & 3u));
    index >>= 2;
  }
  return x;
}

bool PauliString::is_identity() const noexcept {
  for (Pauli p : letters_)
    if (p != Pauli::I) return false;
  return true;
}

QubitSet PauliString::support() const {
  std::vector<int> q;
  for (int i = 1; i <= size(); ++i)
    if ((*this)[i] != Pauli::I) q.push_back(i);
  return QubitSet(std::move(q));
}

bool PauliString::support_intersects(const QubitSet& set) const {
  for (int q : set)
    if (q <= size() && (*this)[q] != Pauli::I) return true;
  return false;
}

PauliString PauliString::restricted_to(const QubitSet& qubits) const {
  std::vector<Pauli> out;
  out.reserve(qubits.size());
  for (int q : qubits) out.push_back((*this)[q]);
  return PauliString(std::move(out));
}

std::string PauliString::to_string() const {
  std::string s;
  s.reserve(letters_.size());
  for (Pauli p : letters_) s.push_back(to_char(p));
  return s;
}

PauliSpectrum::PauliSpectrum(int n, Terms terms) : n_(n), terms_(std::move(terms)) {
  for (const auto& [x, c] : terms_) {
    require(x.size() == n_, ErrorCode::DimensionMismatch,
            "Pauli string length does not match spectrum qubit count");
  }
}

Complex PauliSpectrum::coefficient(const PauliString& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? Complex{} : it->second;
}

void PauliSpectrum::add(const PauliString& x, Complex value) {
  require(x.size() == n_, ErrorCode::DimensionMismatch,
          "Pauli string length does not match spectrum qubit count");
  terms_[x] += value;
}

double PauliSpectrum::weight() const {
  double w = 0.0;
  for (const auto& [x, c] : terms_) w += std::norm(c);
  return w;
}

namespace {

// sigma_x has a single nonzero per row: row r couples to column r ^ flip with
// value (-i)^{#Y} (-1)^{popcount(r & phase)}.
struct PauliAction {
  std::uint64_t flip = 0;
  std::uint64_t phase = 0;
  Complex global{1.0, 0.0};

  Complex entry(std::uint64_t row) const {
    return (std::popcount(row & phase) & 1) ? -global : global;
  }
};

PauliAction action_of(const PauliString& x) {
  PauliAction a;
  const int n = x.size();
  int ys = 0;
  for (int q = 1; q <= n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << bit_of(q, n);
    switch (x[q]) {
      case Pauli::I: break;
      case Pauli::X: a.flip |= bit; break;
      case Pauli::Y: a.flip |= bit; a.phase |= bit; ++ys; break;
      case Pauli::Z: a.phase |= bit; break;
    }
  }
  static const Complex kMinusIPowers[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  a.global = kMinusIPowers[ys % 4];
  return a;
}

}  // namespace

Matrix pauli_matrix(const PauliString& x) {
  const auto dim = dim_of(x.size());
  const PauliAction a = action_of(x);
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::uint64_t r = 0; r < dim; ++r)
    m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r ^ a.flip)) = a.entry(r);
  return m;
}

PauliSpectrum decompose(const Matrix& a) {
  const int n = qubits_of(a);
  require(n >= 0, ErrorCode::DimensionMismatch, "decompose needs a 2^n x 2^n matrix");
  require(n <= 12, ErrorCode::LimitExceeded, "decompose supports at most 12 qubits");
  const std::uint64_t dim = dim_of(n);
  const std::uint64_t strings = std::uint64_t{1} << (2 * n);
  PauliSpectrum s(n);
  for (std::uint64_t index = 0; index < strings; ++index) {
    const PauliString x = PauliString::from_index(index, n);
    const PauliAction act = action_of(x);
    // Tr(sigma_x A) = sum_r sigma_x[r, r^f] A[r^f, r]
    Complex tr{};
    for (std::uint64_t r = 0; r < dim; ++r) {
      tr += act.entry(r) *
            a(static_cast<Eigen::Index>(r ^ act.flip), static_cast<Eigen::Index>(r));
    }
    const Complex c = tr / static_cast<double>(dim);
    if (std::abs(c) >= PauliSpectrum::kCutoff) s.add(x, c);
  }
  return s;
}

Matrix reconstruct(const PauliSpectrum& s) {
  const int n = s.qubits();
  const auto dim = static_cast<Eigen::Index>(dim_of(n));
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& [x, c] : s.terms()) {
    const PauliAction a = action_of(x);
    for (Eigen::Index r = 0; r < dim; ++r) {
      const auto ur = static_cast<std::uint64_t>(r);
      m(r, static_cast<Eigen::Index>(ur ^ a.flip)) += c * a.entry(ur);
    }
  }
  return m;
}

PauliSpectrum derivative(const PauliSpectrum& s, int qubit) {
  require(qubit >= 1 && qubit <= s.qubits(), ErrorCode::InvalidArgument,
          "derivative qubit index out of range");
  PauliSpectrum out(s.qubits());
  for (const auto& [x, c] : s.terms())
    if (x[qubit] != Pauli::I) out.add(x, c);
  return out;
}

double influence(const PauliSpectrum& s, const QubitSet& subset) {
  check_within(subset, s.qubits());
  double inf = 0.0;
  for (const auto& [x, c] : s.terms())
    if (x.support_intersects(subset)) inf += std::norm(c);
  return inf;
}

Complex inner_product(const PauliSpectrum& a, const PauliSpectrum& b) {
  require(a.qubits() == b.qubits(), ErrorCode::DimensionMismatch,
          "inner product of spectra on different qubit counts");
  Complex acc{};
  for (const auto& [x, c] : a.terms()) acc += std::conj(c) * b.coefficient(x);
  return acc;
}

PauliSpectrum embed(const PauliSpectrum& s, const QubitSet& support, int n) {
  require(static_cast<int>(support.size()) == s.qubits(), ErrorCode::DimensionMismatch,
          "support size does not match spectrum qubit count");
  check_within(support, n);
  PauliSpectrum out(n);
  for (const auto& [x, c] : s.terms()) {
    PauliString lifted(n);
    for (int j = 1; j <= s.qubits(); ++j)
      lifted.set(support[static_cast<std::size_t>(j - 1)], x[j]);
    out.add(lifted, c);
  }
  return out;
}

PauliSpectrum restrict_support(const PauliSpectrum& s, const QubitSet& qubits) {
  check_within(qubits, s.qubits());
  const QubitSet outside = qubits.complement(s.qubits());
  PauliSpectrum out(static_cast<int>(qubits.size()));
  for (const auto& [x, c] : s.terms())
    if (!x.support_intersects(outside)) out.add(x.restricted_to(qubits), c);
  return out;
}

}  // namespace qjunta
