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

#include <optional>

#include "qjunta/boolean.hpp"
#include "qjunta/linalg.hpp"
#include "qjunta/qubits.hpp"
#include "qjunta/unitary.hpp"

namespace qjunta {

/// Pr_x[f(x) != g(x)] over uniform x.
double boolean_distance(const BooleanFunction& f, const BooleanFunction& g);

/// min over Boolean k-juntas g of Pr[f != g]. Brute force over k-subsets with a
/// majority vote per restriction; n <= 6, k <= 2.
double distance_to_boolean_juntas(const BooleanFunction& f, int k);

/// min over Boolean k-juntas g of dist(U_f, U_g), enumerating every function
/// on every k-subset; n <= 4, k <= 2.
double min_distance_to_encoded_juntas(const BooleanFunction& f, int k);

/// Inf_{complement of T}[U] >= eps^2/4 - 1e-9 for every T with |T| <= k.
/// n <= 6.
bool check_wang_lemma(const Matrix& u, int k, double eps);

/// dist(U_f, U_g)^2 == 2 min(Pr[f != g], Pr[f == g]) to 1e-9.
bool check_encoding_distance(const BooleanFunction& f, const BooleanFunction& g);

/// Whether min over Boolean k-juntas g of dist(U_f, U_g) >= sqrt(2 eps) - 1e-9.
/// std::nullopt when f is not eps-far from Boolean k-juntas (nothing to check).
std::optional<bool> check_lb_no_case(const BooleanFunction& f, int k, double eps);

struct StructuralCheck {
  /// The Boolean k-junta built from the best diagonal sign pattern for the core.
  BooleanFunction g;
  double dist_to_g = 0.0;
  double dist_to_f = 0.0;
  bool holds = false;
};

/// dist(V, U_g) <= dist(V, U_f) + 1e-9, where g applies to the support of V
/// the h minimising dist(core, diag((-1)^h)) over all 2^{2^k} functions h.
/// k <= 2, n <= 8.
StructuralCheck check_structural_lemma(const StructuredJunta& v, const BooleanFunction& f);

/// Inf_S[U] from the full 4^n decomposition against explicitly built Pauli
/// matrices; n <= 6.
double exact_influence(const Matrix& u, const QubitSet& subset);

/// min over theta of ||e^{i theta} A - B|| / sqrt(2N) by a 10^5-point grid
/// followed by golden-section refinement.
double dist_grid(const Matrix& a, const Matrix& b);

}  // namespace qjunta
