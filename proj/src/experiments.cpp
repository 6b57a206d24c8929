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

#include "qjunta/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "qjunta/amplification.hpp"
#include "qjunta/errors.hpp"
#include "qjunta/verify.hpp"

namespace qjunta {

using json = nlohmann::json;

void ExperimentOptions::validate() const {
  require(k >= 1, ErrorCode::InvalidArgument, "k must be at least 1");
  require(eps > 0.0 && eps <= 1.0, ErrorCode::InvalidArgument, "eps must lie in (0, 1]");
  require(trials >= 0, ErrorCode::InvalidArgument, "trials must be non-negative");
  require(threads >= 0, ErrorCode::InvalidArgument, "threads must be non-negative");
  require(c_aa > 0.0 && c_ggt > 0.0 && c_l > 0.0 && c_t > 0.0, ErrorCode::InvalidArgument,
          "calibration constants must be positive");
}

TesterParams ExperimentOptions::tester() const {
  TesterParams p;
  p.k = k;
  p.eps = eps;
  p.c_aa = c_aa;
  p.c_ggt = c_ggt;
  return p;
}

LearnerParams ExperimentOptions::learner() const {
  LearnerParams p;
  p.k = k;
  p.eps = eps;
  p.c_l = c_l;
  p.c_t = c_t;
  p.backend = backend;
  return p;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <class Fn>
void parallel_for(int count, int threads, Fn&& fn) {
  if (count <= 0) return;
  int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, count);
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);
}

json ledger_json(const QueryLedger& l) {
  return {{"simulated_u", l.simulated_u},
          {"simulated_u_dagger", l.simulated_u_dagger},
          {"modeled_quantum", l.modeled_quantum}};
}

json ledger_mean_json(const QueryLedger& total, int trials) {
  const double t = trials > 0 ? trials : 1;
  return {{"simulated_u", static_cast<double>(total.simulated_u) / t},
          {"simulated_u_dagger", static_cast<double>(total.simulated_u_dagger) / t},
          {"modeled_quantum", static_cast<double>(total.modeled_quantum) / t}};
}

json instance_summary(const Instance& instance) {
  json j = {{"kind", to_string(instance.kind)}, {"n", instance.unitary.qubits()}};
  if (instance.unitary.is_junta()) j["support"] = instance.unitary.junta().support().indices();
  if (instance.truth_table) j["truth_table"] = instance.truth_table->to_string();
  if (!instance.label.empty()) j["label"] = instance.label;
  return j;
}

json base_parameters(const ExperimentOptions& o, int n) {
  return {{"k", o.k}, {"eps", o.eps}, {"n", n}, {"trials", o.trials}, {"seed", o.seed}};
}

QubitSet random_subset(int n, std::mt19937_64& rng, bool nonempty) {
  std::bernoulli_distribution coin(0.5);
  while (true) {
    std::vector<int> members;
    for (int q = 1; q <= n; ++q)
      if (coin(rng)) members.push_back(q);
    if (!nonempty || !members.empty()) return QubitSet(std::move(members));
  }
}

QubitSet random_support(int n, int k, std::mt19937_64& rng) {
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int q = 1; q <= n; ++q) all[static_cast<std::size_t>(q - 1)] = q;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(k));
  return QubitSet(std::move(all));
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

// ---- verify suites ----

class Check {
 public:
  explicit Check(std::string name) : name_(std::move(name)) {}

  template <class Detail>
  void record(bool ok, Detail&& detail) {
    ++cases_;
    if (ok) return;
    if (failures_ == 0) counterexample_ = detail();
    ++failures_;
  }

  json to_json() const {
    json j = {{"name", name_}, {"cases", cases_}, {"failures", failures_},
              {"passed", failures_ == 0 && cases_ > 0}};
    if (failures_ > 0) j["counterexample"] = counterexample_;
    return j;
  }

 private:
  std::string name_;
  std::uint64_t cases_ = 0;
  std::uint64_t failures_ = 0;
  json counterexample_;
};

std::vector<BooleanFunction> all_functions(int n) {
  const std::uint64_t count = std::uint64_t{1} << (std::size_t{1} << n);
  std::vector<BooleanFunction> out;
  for (std::uint64_t h = 0; h < count; ++h) {
    std::vector<std::uint8_t> table(std::size_t{1} << n);
    for (std::size_t x = 0; x < table.size(); ++x) table[x] = (h >> x) & 1u;
    out.emplace_back(std::move(table));
  }
  return out;
}

json core_suite(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small_n(1, 4);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  json checks = json::array();

  Check parseval("parseval_plancherel");
  Check round_trip("decompose_round_trip");
  for (int i = 0; i < 100; ++i) {
    const int n = small_n(rng);
    const Matrix a = haar_random_unitary(n, rng()).matrix();
    const Matrix b = haar_random_unitary(n, rng()).matrix();
    const PauliSpectrum sa = decompose(a);
    const PauliSpectrum sb = decompose(b);
    const Complex hs = (a.adjoint() * b).trace() / static_cast<double>(a.rows());
    const double err = std::max(std::abs(sa.weight() - 1.0), std::abs(hs - inner_product(sa, sb)));
    parseval.record(err <= 1e-9, [&] { return json{{"n", n}, {"error", err}}; });
    const double rt = max_abs(reconstruct(sa) - a);
    round_trip.record(rt <= 1e-9, [&] { return json{{"n", n}, {"error", rt}}; });
  }
  checks.push_back(parseval.to_json());
  checks.push_back(round_trip.to_json());

  Check equivalence("influence_partial_trace_equivalence");
  Check oracle_agreement("influence_brute_force_agreement");
  for (int i = 0; i < 100; ++i) {
    const int n = small_n(rng);
    const Matrix u = haar_random_unitary(n, rng()).matrix();
    const QubitSet s = random_subset(n, rng, true);
    const double fourier = influence(decompose(u), s);
    const double trace = influence_via_partial_trace(u, s);
    const double brute = exact_influence(u, s);
    equivalence.record(std::abs(fourier - trace) <= 1e-9, [&] {
      return json{{"n", n}, {"S", s.indices()}, {"fourier", fourier}, {"partial_trace", trace}};
    });
    oracle_agreement.record(std::abs(fourier - brute) <= 1e-9, [&] {
      return json{{"n", n}, {"S", s.indices()}, {"fourier", fourier}, {"brute_force", brute}};
    });
  }
  checks.push_back(equivalence.to_json());
  checks.push_back(oracle_agreement.to_json());

  Check monotone("influence_monotonicity");
  Check subadditive("influence_subadditivity");
  for (int i = 0; i < 500; ++i) {
    const int n = small_n(rng);
    const PauliSpectrum s = haar_random_unitary(n, rng()).spectrum();
    const QubitSet a = random_subset(n, rng, false);
    const QubitSet b = random_subset(n, rng, false);
    const QubitSet ab = a.united(b);
    const double ia = influence(s, a), ib = influence(s, b), iab = influence(s, ab);
    monotone.record(ia <= iab + 1e-12, [&] {
      return json{{"S", a.indices()}, {"T", ab.indices()}, {"inf_S", ia}, {"inf_T", iab}};
    });
    subadditive.record(iab <= ia + ib + 1e-12, [&] {
      return json{{"S", a.indices()}, {"T", b.indices()}, {"inf_union", iab}, {"sum", ia + ib}};
    });
  }
  checks.push_back(monotone.to_json());
  checks.push_back(subadditive.to_json());

  Check nullity("junta_nullity");
  for (int i = 0; i < 50; ++i) {
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    const int k = std::uniform_int_distribution<int>(1, std::min(2, n - 1))(rng);
    const QubitSet support = random_support(n, k, rng);
    const StructuredJunta v(n, support, haar_random_unitary(k, rng()));
    const QubitSet off = random_subset(n, rng, false).minus(support);
    const double inf = influence(decompose(v.to_dense()), off);
    nullity.record(inf <= 1e-12, [&] {
      return json{{"n", n}, {"support", support.indices()}, {"T", off.indices()}, {"inf", inf}};
    });
  }
  checks.push_back(nullity.to_json());

  Check closed_form("dist_closed_form_vs_grid");
  for (int i = 0; i < 200; ++i) {
    const int n = small_n(rng);
    const Matrix a = haar_random_unitary(n, rng()).matrix();
    const Matrix b = haar_random_unitary(n, rng()).matrix();
    const double fast = dist(a, b), grid = dist_grid(a, b);
    closed_form.record(std::abs(fast - grid) <= 1e-6, [&] {
      return json{{"n", n}, {"closed_form", fast}, {"grid", grid}};
    });
  }
  checks.push_back(closed_form.to_json());

  Check properties("dist_symmetry_phase_triangle_tensor");
  for (int i = 0; i < 100; ++i) {
    const int n = small_n(rng);
    const Matrix a = haar_random_unitary(n, rng()).matrix();
    const Matrix b = haar_random_unitary(n, rng()).matrix();
    const Matrix c = haar_random_unitary(n, rng()).matrix();
    const Matrix u = haar_random_unitary(1, rng()).matrix();
    const Complex pa = std::polar(1.0, angle(rng)), pb = std::polar(1.0, angle(rng));
    const double ab = dist(a, b);
    const double err = std::max({std::abs(ab - dist(b, a)), std::abs(ab - dist(pa * a, pb * b)),
                                 std::abs(ab - dist(kron(a, u), kron(b, u))),
                                 std::abs(ab - dist(kron(u, a), kron(u, b)))});
    const double triangle = ab - (dist(a, c) + dist(c, b));
    properties.record(err <= 1e-9 && triangle <= 1e-9, [&] {
      return json{{"n", n}, {"invariance_error", err}, {"triangle_excess", triangle}};
    });
  }
  checks.push_back(properties.to_json());

  Check encoding("encoding_distance_exhaustive");
  for (int n = 1; n <= 3; ++n) {
    const auto all = all_functions(n);
    for (const auto& f : all)
      for (const auto& g : all)
        encoding.record(check_encoding_distance(f, g), [&] {
          return json{{"f", f.to_string()}, {"g", g.to_string()}};
        });
  }
  checks.push_back(encoding.to_json());
  return checks;
}

json lower_bound_suite(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  json checks = json::array();

  Check parity("lb_no_case_parity");
  for (int m : {2, 3}) {
    const auto f = BooleanFunction::parity(m, m);
    const auto verdict = check_lb_no_case(f, 1, 0.5);
    parity.record(verdict.value_or(false), [&] {
      return json{{"f", f.to_string()}, {"min_distance", min_distance_to_encoded_juntas(f, 1)}};
    });
  }
  checks.push_back(parity.to_json());

  Check exhaustive("lb_no_case_exhaustive");
  Check wang("wang_lemma_exhaustive");
  for (int n = 2; n <= 3; ++n) {
    for (const auto& f : all_functions(n)) {
      const double eps_b = distance_to_boolean_juntas(f, 1);
      if (eps_b <= 0.0) continue;
      exhaustive.record(check_lb_no_case(f, 1, eps_b).value_or(false), [&] {
        return json{{"f", f.to_string()}, {"eps", eps_b},
                    {"min_distance", min_distance_to_encoded_juntas(f, 1)}};
      });
      const double eps_q = std::sqrt(2.0 * eps_b);
      wang.record(check_wang_lemma(encode_boolean(f).matrix(), 1, eps_q), [&] {
        return json{{"f", f.to_string()}, {"eps", eps_q}};
      });
    }
  }
  checks.push_back(exhaustive.to_json());
  checks.push_back(wang.to_json());

  Check structural("structural_lemma_sweep");
  const auto far = [] {
    std::vector<BooleanFunction> out;
    for (const auto& f : all_functions(3))
      if (distance_to_boolean_juntas(f, 1) > 0.0) out.push_back(f);
    return out;
  }();
  std::uniform_int_distribution<std::size_t> pick(0, far.size() - 1);
  for (int i = 0; i < 50; ++i) {
    const QubitSet support = random_support(3, 1, rng);
    const StructuredJunta v(3, support, haar_random_unitary(1, rng()));
    const BooleanFunction& f = far[pick(rng)];
    const StructuralCheck r = check_structural_lemma(v, f);
    structural.record(r.holds, [&] {
      return json{{"support", support.indices()}, {"f", f.to_string()}, {"g", r.g.to_string()},
                  {"dist_to_g", r.dist_to_g}, {"dist_to_f", r.dist_to_f}};
    });
  }
  checks.push_back(structural.to_json());
  return checks;
}

// Smallest c_aa on a 0.05 grid meeting `target` at p = delta and every p = 2^j delta.
double fit_c_aa(const std::vector<double>& deltas, double target) {
  for (int step = 1; step <= 400; ++step) {
    const double c = 0.05 * step;
    bool ok = true;
    for (double delta : deltas) {
      for (double p = delta; ok; p = std::min(1.0, 2.0 * p)) {
        ok = amplification_success_probability(p, AmplificationSchedule{delta, c}) >= target;
        if (p >= 1.0) break;
      }
      if (!ok) break;
    }
    if (ok) return c;
  }
  return std::nan("");
}

// Fraction of runs where measurement tomography of |v(H)> reaches fidelity
// 1 - eps_prime.
double tomography_success_rate(double c_t, double eps_prime, int runs, std::uint64_t seed) {
  Matrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  const Vector psi = cj_state(h).amplitudes;
  std::mt19937_64 rng(seed);
  const std::uint64_t copies = tomography_copies(1, eps_prime, c_t);
  int good = 0;
  for (int r = 0; r < runs; ++r) {
    const TomographyResult est =
        tomography_of_state(psi, copies, eps_prime, TomographyBackend::Measurement, c_t, rng);
    good += fidelity(psi, est.state) >= 1.0 - eps_prime ? 1 : 0;
  }
  return static_cast<double>(good) / runs;
}

json calibration_suite(std::uint64_t seed) {
  const std::vector<double> deltas = {0.5, 0.1, 0.01};
  const TesterParams tester;
  const LearnerParams learner;
  json checks = json::array();

  // 0.95 leaves room for the empirical 0.9 threshold over 10^3 runs.
  const double c_aa_fit = fit_c_aa(deltas, 0.95);
  Check aa("configured_c_aa_meets_target");
  json at_delta = json::object();
  for (double delta : deltas) {
    const double p = amplification_success_probability(delta, AmplificationSchedule{delta, tester.c_aa});
    std::ostringstream key;
    key << delta;
    at_delta[key.str()] = p;
    aa.record(p >= 0.9, [&] { return json{{"delta", delta}, {"success", p}}; });
  }
  checks.push_back(aa.to_json());

  constexpr double kEpsPrime = 0.01;
  double c_t_fit = std::nan("");
  for (int c = 1; c <= 32; ++c) {
    if (tomography_success_rate(c, kEpsPrime, 100, seed) >= 0.95) {
      c_t_fit = c;
      break;
    }
  }
  Check tomo("configured_c_t_meets_target");
  const double rate = tomography_success_rate(learner.c_t, kEpsPrime, 100, trial_seed(seed, 1));
  tomo.record(rate >= 0.95, [&] { return json{{"c_t", learner.c_t}, {"success_rate", rate}}; });
  checks.push_back(tomo.to_json());

  json constants = {
      {"c_aa", {{"fitted", c_aa_fit}, {"configured", tester.c_aa}, {"target", 0.95},
                {"success_at_delta", at_delta}}},
      {"c_ggt", {{"fitted", tester.c_ggt}, {"configured", tester.c_ggt}, {"declared", true}}},
      {"c_t", {{"fitted", c_t_fit}, {"configured", learner.c_t}, {"eps_prime", kEpsPrime},
               {"configured_success_rate", rate}}},
      {"c_l", {{"fitted", 4.0 * c_t_fit}, {"configured", learner.c_l}}},
  };
  return json{{"checks", checks}, {"constants", constants}};
}

}  // namespace

Instance generate_instance(const std::string& kind, const std::string& family, int n, int k,
                           std::uint64_t seed) {
  require(n >= 1, ErrorCode::InvalidArgument, "n must be at least 1");
  std::mt19937_64 rng(seed);
  if (kind == "junta") {
    require(k >= 1 && k <= n, ErrorCode::InvalidArgument, "junta needs 1 <= k <= n");
    require(n <= default_limits().max_total_qubits, ErrorCode::LimitExceeded,
            "junta exceeds the total qubit cap");
    require(k <= default_limits().max_core_qubits, ErrorCode::LimitExceeded,
            "junta core exceeds the core qubit cap");
    const QubitSet support = random_support(n, k, rng);
    if (family == "haar" || family.empty()) {
      return Instance::junta(StructuredJunta(n, support, haar_random_unitary(k, rng())),
                             "junta-haar");
    }
    if (family == "identity")
      return Instance::junta(StructuredJunta(n, support, DenseUnitary::identity(k)),
                             "junta-identity");
    fail(ErrorCode::InvalidArgument, "unknown junta family '" + family + "'");
  }
  if (kind == "boolean") {
    require(n <= default_limits().max_dense_qubits, ErrorCode::LimitExceeded,
            "Boolean instance exceeds the dense qubit cap");
    if (family.rfind("parity-", 0) == 0) {
      int m = 0;
      try {
        m = std::stoi(family.substr(7));
      } catch (const std::exception&) {
        fail(ErrorCode::InvalidArgument, "bad parity family '" + family + "'");
      }
      require(m >= 0 && m <= n, ErrorCode::InvalidArgument, "parity-m needs 0 <= m <= n");
      return Instance::boolean(BooleanFunction::parity(n, m), family);
    }
    if (family == "random") {
      std::vector<std::uint8_t> table(std::size_t{1} << n);
      std::bernoulli_distribution coin(0.5);
      for (auto& b : table) b = coin(rng) ? 1 : 0;
      return Instance::boolean(BooleanFunction(std::move(table)), "random");
    }
    fail(ErrorCode::InvalidArgument, "unknown Boolean family '" + family + "'");
  }
  if (kind == "dense") {
    require(n <= default_limits().max_dense_qubits, ErrorCode::LimitExceeded,
            "dense instance exceeds the dense qubit cap of " +
                std::to_string(default_limits().max_dense_qubits));
    if (family == "haar" || family.empty())
      return Instance::dense(haar_random_unitary(n, rng()), "dense-haar");
    if (family == "identity") return Instance::dense(DenseUnitary::identity(n), "dense-identity");
    fail(ErrorCode::InvalidArgument, "unknown dense family '" + family + "'");
  }
  fail(ErrorCode::InvalidArgument, "unknown instance kind '" + kind + "'");
}

json run_test(const Instance& instance, const ExperimentOptions& options) {
  options.validate();
  const TesterParams params = options.tester();
  params.validate();
  const auto start = Clock::now();
  const int n = instance.unitary.qubits();

  std::vector<JuntaTestResult> results(static_cast<std::size_t>(options.trials));
  parallel_for(options.trials, options.threads, [&](int i) {
    UnitaryOracle oracle(instance.unitary, trial_seed(options.seed, static_cast<std::uint64_t>(i)));
    results[static_cast<std::size_t>(i)] = junta_tester(oracle, params);
  });

  json trials = json::array();
  QueryLedger total;
  int accepted = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const JuntaTestResult& r = results[i];
    json stages = json::array();
    for (const auto& s : r.stages) {
      json stage = {{"name", s.name}, {"accept", s.accept}, {"accept_votes", s.accept_votes},
                    {"votes", s.votes}, {"ledger", ledger_json(s.cost)}};
      if (s.level >= 0) stage["level"] = s.level;
      if (s.name == "tester_two") stage["estimate"] = s.estimate;
      stages.push_back(std::move(stage));
    }
    trials.push_back({{"index", i}, {"seed", trial_seed(options.seed, i)},
                      {"decision", r.yes ? "yes" : "no"}, {"stages", std::move(stages)},
                      {"ledger", ledger_json(r.cost)}});
    total += r.cost;
    accepted += r.yes ? 1 : 0;
  }

  json parameters = base_parameters(options, n);
  parameters["c_aa"] = params.c_aa;
  parameters["c_ggt"] = params.c_ggt;
  parameters["tester_two_samples"] = params.tester_two_samples;
  parameters["stage_votes"] = params.stage_votes;
  json report = {
      {"schema", kReportSchema},
      {"command", "test"},
      {"parameters", parameters},
      {"instance", instance_summary(instance)},
      {"trials", trials},
      {"summary",
       {{"accepted", accepted},
        {"accept_fraction", options.trials > 0 ? static_cast<double>(accepted) / options.trials : 0.0},
        {"decision", 2 * accepted > options.trials ? "yes" : "no"},
        {"modeled_per_trial", junta_tester_modeled_cost(params)},
        {"ledger_total", ledger_json(total)},
        {"ledger_mean", ledger_mean_json(total, options.trials)}}},
  };
  report["wall_time_seconds"] = seconds_since(start);
  return report;
}

json run_learn(const Instance& instance, const ExperimentOptions& options,
               std::optional<Instance>* learned) {
  options.validate();
  const LearnerParams params = options.learner();
  params.validate();
  const auto start = Clock::now();
  const int n = instance.unitary.qubits();

  struct Outcome {
    std::optional<LearnedJunta> junta;
    double distance = 0.0;
    QueryLedger cost;
    std::optional<ErrorCode> error;
    std::string message;
  };
  std::vector<Outcome> outcomes(static_cast<std::size_t>(options.trials));
  parallel_for(options.trials, options.threads, [&](int i) {
    Outcome& out = outcomes[static_cast<std::size_t>(i)];
    UnitaryOracle oracle(instance.unitary, trial_seed(options.seed, static_cast<std::uint64_t>(i)));
    try {
      LearnedJunta j = junta_learner(oracle, params);
      out.distance = dist(instance.unitary, Unitary(j.junta(n)));
      out.junta = std::move(j);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InsufficientCopies && e.code() != ErrorCode::InvalidArgument)
        throw;
      out.error = e.code();
      out.message = e.what();
    }
    out.cost = oracle.ledger();
  });

  json trials = json::array();
  QueryLedger total;
  int successes = 0, errors = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const Outcome& o = outcomes[i];
    json t = {{"index", i}, {"seed", trial_seed(options.seed, i)}, {"ledger", ledger_json(o.cost)}};
    if (o.junta) {
      const bool ok = o.distance <= params.eps;
      t["status"] = "ok";
      t["dist"] = o.distance;
      t["success"] = ok;
      t["sampled"] = o.junta->sampled.indices();
      t["support"] = o.junta->ordered_support;
      t["copies"] = o.junta->copies;
      t["attempts"] = o.junta->attempts;
      successes += ok ? 1 : 0;
    } else {
      t["status"] = "error";
      t["success"] = false;
      t["error"] = {{"code", to_string(*o.error)}, {"message", o.message}};
      ++errors;
    }
    trials.push_back(std::move(t));
    total += o.cost;
  }
  if (learned) {
    learned->reset();
    for (const auto& o : outcomes) {
      if (o.junta) {
        *learned = Instance::junta(o.junta->junta(n), "learned");
        break;
      }
    }
  }

  json parameters = base_parameters(options, n);
  parameters["backend"] = to_string(params.backend);
  parameters["c_l"] = params.c_l;
  parameters["c_t"] = params.c_t;
  parameters["gamma"] = params.gamma();
  parameters["copies_target"] = params.copies_target();
  parameters["max_attempts"] = params.max_attempts();
  parameters["tomography_error"] = params.tomography_error();
  json report = {
      {"schema", kReportSchema},
      {"command", "learn"},
      {"parameters", parameters},
      {"instance", instance_summary(instance)},
      {"trials", trials},
      {"summary",
       {{"successes", successes},
        {"errors", errors},
        {"success_fraction",
         options.trials > 0 ? static_cast<double>(successes) / options.trials : 0.0},
        {"modeled_per_trial", junta_learner_modeled_cost(params)},
        {"ledger_total", ledger_json(total)},
        {"ledger_mean", ledger_mean_json(total, options.trials)}}},
  };
  report["wall_time_seconds"] = seconds_since(start);
  return report;
}

json run_verify(const std::string& suite, std::uint64_t seed) {
  const auto start = Clock::now();
  const bool all = suite == "all";
  require(all || suite == "core" || suite == "lower-bound" || suite == "calibration",
          ErrorCode::InvalidArgument, "unknown verify suite '" + suite + "'");
  json checks = json::array();
  json report = {{"schema", kReportSchema}, {"command", "verify"}, {"suite", suite},
                 {"seed", seed}};
  auto append = [&](const json& more) {
    for (const auto& c : more) checks.push_back(c);
  };
  if (all || suite == "core") append(core_suite(seed));
  if (all || suite == "lower-bound") append(lower_bound_suite(trial_seed(seed, 1)));
  if (all || suite == "calibration") {
    json cal = calibration_suite(trial_seed(seed, 2));
    append(cal["checks"]);
    report["constants"] = cal["constants"];
  }
  bool passed = true;
  for (const auto& c : checks) passed = passed && c["passed"].get<bool>();
  report["checks"] = checks;
  report["passed"] = passed;
  report["wall_time_seconds"] = seconds_since(start);
  return report;
}

double tester_scaling_formula(int k, double eps) {
  const double l = std::log2(400.0 * k);
  return std::sqrt(k * l) * l / eps;
}

double learner_scaling_formula(int k, double eps) { return std::ldexp(1.0, 2 * k) / (eps * eps); }

json scaling_fit(const std::vector<double>& measured, const std::vector<double>& formula) {
  require(measured.size() == formula.size(), ErrorCode::DimensionMismatch,
          "scaling fit needs matching series");
  if (measured.empty())
    return {{"C", nullptr}, {"ratios", json::array()}, {"within_factor_3", true}};
  std::vector<double> ratios;
  for (std::size_t i = 0; i < measured.size(); ++i) ratios.push_back(measured[i] / formula[i]);
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  const double c = std::sqrt(*lo * *hi);
  json normalized = json::array();
  bool within = true;
  for (double r : ratios) {
    normalized.push_back(r / c);
    within = within && r / c <= 3.0 && r / c >= 1.0 / 3.0;
  }
  return {{"C", c}, {"ratios", normalized}, {"within_factor_3", within}};
}

json run_bench(const std::vector<int>& ks, const std::string& algorithm,
               const ExperimentOptions& options) {
  options.validate();
  require(algorithm == "tester" || algorithm == "learner" || algorithm == "both",
          ErrorCode::InvalidArgument, "bench algorithm must be tester, learner or both");
  const auto start = Clock::now();
  json rows = json::array();
  json fits = json::object();

  auto bench_one = [&](const std::string& name) {
    std::vector<double> measured, formula;
    for (int k : ks) {
      require(k >= 1 && k <= default_limits().max_core_qubits, ErrorCode::LimitExceeded,
              "bench k must lie in [1, " + std::to_string(default_limits().max_core_qubits) + "]");
      ExperimentOptions o = options;
      o.k = k;
      if (name == "learner" && k > kMeasurementBackendMaxK) o.backend = TomographyBackend::Exact;
      const int n = k + 2;
      const std::uint64_t seed = trial_seed(options.seed, 1000 + static_cast<std::uint64_t>(k));
      const Instance instance = generate_instance("junta", "haar", n, k, seed);
      o.seed = seed;
      const json report = name == "tester" ? run_test(instance, o) : run_learn(instance, o);
      const json& mean = report["summary"]["ledger_mean"];
      const double f = name == "tester" ? tester_scaling_formula(k, o.eps)
                                        : learner_scaling_formula(k, o.eps);
      json row = {{"algorithm", name},
                  {"k", k},
                  {"n", n},
                  {"eps", o.eps},
                  {"trials", o.trials},
                  {"modeled_mean", mean["modeled_quantum"]},
                  {"simulated_u_mean", mean["simulated_u"]},
                  {"simulated_u_dagger_mean", mean["simulated_u_dagger"]},
                  {"formula", f}};
      if (name == "learner") {
        row["backend"] = to_string(o.backend);
        row["success_fraction"] = report["summary"]["success_fraction"];
      } else {
        row["accept_fraction"] = report["summary"]["accept_fraction"];
      }
      measured.push_back(mean["modeled_quantum"].get<double>());
      formula.push_back(f);
      rows.push_back(std::move(row));
    }
    fits[name] = scaling_fit(measured, formula);
  };
  if (algorithm != "learner") bench_one("tester");
  if (algorithm != "tester") bench_one("learner");

  json report = {{"schema", kReportSchema},
                 {"command", "bench"},
                 {"parameters",
                  {{"k_list", ks}, {"algorithm", algorithm}, {"eps", options.eps},
                   {"trials", options.trials}, {"seed", options.seed},
                   {"backend", to_string(options.backend)}}},
                 {"rows", rows},
                 {"fits", fits}};
  report["wall_time_seconds"] = seconds_since(start);
  return report;
}

std::string bench_csv(const json& report) {
  static const char* kColumns[] = {"algorithm",   "k",       "n",
                                   "eps",         "trials",  "modeled_mean",
                                   "simulated_u_mean", "simulated_u_dagger_mean", "formula"};
  std::ostringstream out;
  for (std::size_t i = 0; i < std::size(kColumns); ++i) out << (i ? "," : "") << kColumns[i];
  out << '\n';
  if (!report.contains("rows")) return out.str();
  for (const auto& row : report["rows"]) {
    for (std::size_t i = 0; i < std::size(kColumns); ++i) {
      const json& v = row[kColumns[i]];
      out << (i ? "," : "") << (v.is_string() ? v.get<std::string>() : v.dump());
    }
    out << '\n';
  }
  return out.str();
}

json strip_wall_time(json report) {
  report.erase("wall_time_seconds");
  return report;
}

}  // namespace qjunta
