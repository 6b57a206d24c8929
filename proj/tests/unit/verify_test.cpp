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

#include <gtest/gtest.h>

#include "qjunta/errors.hpp"
#include "qjunta/verify.hpp"
#include "reference.hpp"

namespace qjunta {
namespace {

const BooleanFunction kAnd = BooleanFunction::parse("0001");

TEST(BooleanDistance, Examples) {
  EXPECT_DOUBLE_EQ(boolean_distance(kAnd, BooleanFunction::constant(2, false)), 0.25);
  EXPECT_DOUBLE_EQ(boolean_distance(kAnd, kAnd.negated()), 1.0);
  EXPECT_THROW(boolean_distance(kAnd, BooleanFunction::constant(3, false)), Error);
}

TEST(DistanceToBooleanJuntas, Examples) {
  EXPECT_DOUBLE_EQ(distance_to_boolean_juntas(BooleanFunction::parity(2, 2), 1), 0.5);
  EXPECT_DOUBLE_EQ(distance_to_boolean_juntas(BooleanFunction::parity(3, 3), 2), 0.5);
  EXPECT_DOUBLE_EQ(distance_to_boolean_juntas(kAnd, 1), 0.25);
  EXPECT_DOUBLE_EQ(distance_to_boolean_juntas(BooleanFunction::dictator(4, 3), 1), 0.0);
}

TEST(MinDistanceToEncodedJuntas, Examples) {
  EXPECT_NEAR(min_distance_to_encoded_juntas(BooleanFunction::parity(2, 2), 1), 1.0, 1e-12);
  // AND vs x_1: disagree on 1/4, so dist^2 = 2 * 1/4.
  EXPECT_NEAR(min_distance_to_encoded_juntas(kAnd, 1), std::sqrt(0.5), 1e-12);
  EXPECT_NEAR(min_distance_to_encoded_juntas(BooleanFunction::dictator(3, 2), 1), 0.0, 1e-12);
}

TEST(EncodingDistance, AllPairsOnTwoBits) {
  for (unsigned a = 0; a < 16; ++a)
    for (unsigned b = 0; b < 16; ++b) {
      std::vector<std::uint8_t> ta(4), tb(4);
      for (int i = 0; i < 4; ++i) {
        ta[i] = a >> i & 1u;
        tb[i] = b >> i & 1u;
      }
      EXPECT_TRUE(check_encoding_distance(BooleanFunction(ta), BooleanFunction(tb)));
    }
}

TEST(LowerBoundNoCase, Examples) {
  EXPECT_EQ(check_lb_no_case(BooleanFunction::parity(2, 2), 1, 0.5), std::optional<bool>(true));
  EXPECT_EQ(check_lb_no_case(BooleanFunction::parity(3, 3), 2, 0.5), std::optional<bool>(true));
  EXPECT_EQ(check_lb_no_case(kAnd, 1, 0.5), std::nullopt);
  EXPECT_EQ(check_lb_no_case(kAnd, 1, 0.25), std::optional<bool>(true));
}

TEST(WangLemma, Examples) {
  EXPECT_TRUE(check_wang_lemma(ref::pauli_string("ZZ"), 1, 1.0));
  EXPECT_TRUE(check_wang_lemma(ref::cnot(), 1, 0.5));
  // Far larger eps than the distance allows fails the bound for identity.
  EXPECT_FALSE(check_wang_lemma(Matrix::Identity(4, 4), 1, 0.5));
}

TEST(StructuralLemma, HoldsOnRandomCores) {
  const BooleanFunction f = BooleanFunction::parity(4, 3);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const StructuredJunta v(4, QubitSet{1, 3}, haar_random_unitary(2, seed));
    const StructuralCheck c = check_structural_lemma(v, f);
    EXPECT_TRUE(c.holds) << seed;
    EXPECT_LE(c.dist_to_g, c.dist_to_f + 1e-9);
    EXPECT_EQ(c.g.inputs(), 4);
  }
}

TEST(StructuralLemma, DiagonalCoreGivesExactJunta) {
  const Matrix core = ref::diag_signs("0110");
  const StructuredJunta v(3, QubitSet{2, 3}, DenseUnitary(core));
  const StructuralCheck c = check_structural_lemma(v, BooleanFunction::parity(3, 3));
  EXPECT_TRUE(c.holds);
  EXPECT_NEAR(c.dist_to_g, 0.0, 1e-12);
}

TEST(ExactInfluence, MatchesReference) {
  const Matrix u = haar_random_unitary(3, 2).matrix();
  for (const std::vector<int>& s : {std::vector<int>{1}, {2, 3}, {1, 2, 3}})
    EXPECT_NEAR(exact_influence(u, QubitSet(s)), ref::influence(u, s), 1e-12);
  EXPECT_NEAR(exact_influence(ref::cnot(), QubitSet{2}), 0.5, 1e-12);
}

TEST(DistGrid, MatchesClosedForm) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Matrix a = haar_random_unitary(2, seed).matrix();
    const Matrix b = haar_random_unitary(2, seed + 100).matrix();
    EXPECT_NEAR(dist_grid(a, b), dist(a, b), 1e-9);
  }
  const Matrix a = haar_random_unitary(1, 3).matrix();
  EXPECT_NEAR(dist_grid(a, Complex(0, 1) * a), 0.0, 1e-9);
}

}  // namespace
}  // namespace qjunta
