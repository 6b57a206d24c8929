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

#include <cmath>
#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "qjunta/errors.hpp"
#include "qjunta/learning.hpp"
#include "reference.hpp"

namespace qjunta {
namespace {

Unitary dense(const Matrix& m) { return Unitary(DenseUnitary(m)); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

TEST(LearnerParams, Formulas) {
  LearnerParams p;
  p.k = 1;
  p.eps = 0.25;
  EXPECT_NEAR(p.gamma(), 0.015625, 1e-15);
  EXPECT_EQ(p.copies_target(), 3072u);  // 48 * 4 / 0.0625
  EXPECT_EQ(p.max_attempts(), 30720u);
  EXPECT_NEAR(p.tomography_error(), 0.015625, 1e-15);
  EXPECT_EQ(pauli_sample_count(0.1, 2), 53u);  // ceil(ln 200 / 0.1)
  EXPECT_EQ(junta_learner_modeled_cost(p), pauli_sample_count(p.gamma(), 1) + 30720u);
  p.eps = 1.5;
  EXPECT_THROW(p.validate(), Error);
}

TEST(PauliSampleRelevant, SubsetOfSupport) {
  const StructuredJunta j(12, QubitSet{3, 9}, haar_random_unitary(2, 5));
  UnitaryOracle o(Unitary(j), 1);
  for (int r = 0; r < 50; ++r) EXPECT_TRUE(pauli_sample_relevant(o, 0.1, 2).is_subset_of(QubitSet{3, 9}));
}

TEST(PauliSampleRelevant, CnotInFiveQubits) {
  const StructuredJunta j(5, QubitSet{1, 2}, DenseUnitary(ref::cnot()));
  UnitaryOracle o(Unitary(j), 2);
  int exact = 0;
  for (int r = 0; r < 100; ++r) exact += pauli_sample_relevant(o, 0.1, 2) == QubitSet{1, 2} ? 1 : 0;
  EXPECT_GE(exact, 99);
  EXPECT_EQ(o.ledger().simulated_u, 100u * 53u);
}

TEST(PrepareCopies, StopsAtTarget) {
  UnitaryOracle o(dense(Matrix::Identity(4, 4)), 1);
  const PreparedCopies c = prepare_copies(o, QubitSet{}, 1, 100, 5);
  EXPECT_EQ(c.copies.size(), 5u);
  EXPECT_EQ(c.attempts, 5u);
  UnitaryOracle z(dense(ref::pauli_string("ZZ")), 1);
  const PreparedCopies none = prepare_copies(z, QubitSet{1}, 1, 40, 5);
  EXPECT_TRUE(none.copies.empty());
  EXPECT_EQ(none.attempts, 40u);
}

TEST(StateToUnitary, RecoversUnitaryFromItsState) {
  for (int k : {1, 2, 3}) {
    const Matrix u = haar_random_unitary(k, 40 + k).matrix();
    const DenseUnitary w = state_to_unitary(cj_state(u).amplitudes);
    EXPECT_LT(dist(u, w.matrix()), 1e-7);
  }
  EXPECT_THROW(state_to_unitary(Vector::Ones(8)), Error);
}

TEST(Tomography, CopyCountAndBackends) {
  EXPECT_EQ(tomography_copies(1, 0.01, 12.0), 4800u);
  std::mt19937_64 rng(3);
  const Vector psi = cj_state(haar_random_unitary(1, 8).matrix()).amplitudes;
  const double eps_prime = 0.02;
  const std::uint64_t need = tomography_copies(1, eps_prime, 12.0);
  const TomographyResult exact = tomography_of_state(psi, need, eps_prime, TomographyBackend::Exact, 12.0, rng);
  EXPECT_NEAR(fidelity(exact.state, psi), 1.0, 1e-12);
  for (int r = 0; r < 10; ++r) {
    const TomographyResult m =
        tomography_of_state(psi, need, eps_prime, TomographyBackend::Measurement, 12.0, rng);
    EXPECT_GE(fidelity(m.state, psi), 1.0 - eps_prime);
    EXPECT_EQ(m.copies_used, need);
  }
  EXPECT_EQ(code_of([&] {
              tomography_of_state(psi, need - 1, eps_prime, TomographyBackend::Exact, 12.0, rng);
            }),
            ErrorCode::InsufficientCopies);
  EXPECT_EQ(parse_backend("measurement"), TomographyBackend::Measurement);
  EXPECT_THROW(parse_backend("shadow"), Error);
}

TEST(JuntaLearner, LearnsHaarJunta) {
  for (auto backend : {TomographyBackend::Exact, TomographyBackend::Measurement}) {
    const StructuredJunta j(6, QubitSet{4}, haar_random_unitary(1, 17));
    UnitaryOracle o(Unitary(j), 5);
    LearnerParams p;
    p.k = 1;
    p.eps = 0.25;
    p.backend = backend;
    const LearnedJunta out = junta_learner(o, p);
    EXPECT_EQ(out.ordered_support, (std::vector<int>{4}));
    EXPECT_EQ(out.copies, p.copies_target());
    EXPECT_LE(dist(Unitary(j), Unitary(out.junta(6))), p.eps);
    EXPECT_EQ(out.cost.modeled_quantum, junta_learner_modeled_cost(p));
  }
}

TEST(JuntaLearner, PadsSupportWithSmallestUnusedQubits) {
  const StructuredJunta j(6, QubitSet{5}, DenseUnitary(ref::hadamard()));
  UnitaryOracle o(Unitary(j), 6);
  LearnerParams p;
  p.k = 2;
  p.eps = 0.5;
  const LearnedJunta out = junta_learner(o, p);
  EXPECT_EQ(out.ordered_support, (std::vector<int>{5, 1}));
  EXPECT_LE(dist(Unitary(j), Unitary(out.junta(6))), 1e-6);
}

TEST(JuntaLearner, Failures) {
  UnitaryOracle zz(dense(ref::pauli_string("ZZ")), 1);
  LearnerParams p;
  p.k = 1;
  EXPECT_EQ(code_of([&] { junta_learner(zz, p); }), ErrorCode::InvalidArgument);

  UnitaryOracle h(Unitary(StructuredJunta(3, QubitSet{2}, DenseUnitary(ref::hadamard()))), 2);
  p.c_l = 1.0;  // t far below what tomography needs
  EXPECT_EQ(code_of([&] { junta_learner(h, p); }), ErrorCode::InsufficientCopies);
}

}  // namespace
}  // namespace qjunta
