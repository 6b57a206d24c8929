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
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qjunta/instance_io.hpp"
#include "qjunta/learning.hpp"
#include "qjunta/testing.hpp"

namespace qjunta {

/// Parameters shared by the experiment drivers.
struct ExperimentOptions {
  int k = 1;
  double eps = 0.5;
  int trials = 1;
  std::uint64_t seed = 0;
  TomographyBackend backend = TomographyBackend::Exact;
  double c_aa = TesterParams{}.c_aa;
  double c_ggt = TesterParams{}.c_ggt;
  double c_l = LearnerParams{}.c_l;
  double c_t = LearnerParams{}.c_t;
  /// Worker threads; 0 picks the hardware concurrency. Never affects results.
  int threads = 0;

  void validate() const;
  TesterParams tester() const;
  LearnerParams learner() const;
};

inline constexpr int kReportSchema = 1;

/// splitmix64(seed + 0x9E3779B97F4A7C15 (index + 1))
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

/// Instance families:
///   junta   haar | identity        Haar (or identity) core on k random qubits of n
///   boolean parity-m | random      x_1 xor ... xor x_m, or uniform truth table
///   dense   haar | identity
Instance generate_instance(const std::string& kind, const std::string& family, int n, int k,
                           std::uint64_t seed);

/// Runs the junta tester `trials` times.
nlohmann::json run_test(const Instance& instance, const ExperimentOptions& options);

/// Runs the learner `trials` times; `learned` (optional) receives the output of
/// the first successful trial.
nlohmann::json run_learn(const Instance& instance, const ExperimentOptions& options,
                         std::optional<Instance>* learned = nullptr);

/// Suites: core, lower-bound, calibration, all.
nlohmann::json run_verify(const std::string& suite, std::uint64_t seed);

/// Query counts against k for "tester", "learner" or "both".
nlohmann::json run_bench(const std::vector<int>& ks, const std::string& algorithm,
                         const ExperimentOptions& options);

/// Flattens the rows of a bench report (CSV with a header line).
std::string bench_csv(const nlohmann::json& report);

/// Reference curves for the bench fit:
///   tester  sqrt(k L) L / eps with L = log2(400k)
///   learner 4^k / eps^2
double tester_scaling_formula(int k, double eps);
double learner_scaling_formula(int k, double eps);

/// Fits C = sqrt(max r min r) over the ratios r = measured / formula and reports
/// whether every ratio lies within a factor 3 of C.
nlohmann::json scaling_fit(const std::vector<double>& measured, const std::vector<double>& formula);

/// The report without its wall-time field.
nlohmann::json strip_wall_time(nlohmann::json report);

}  // namespace qjunta
