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

// qjunta: generate instances, run the junta tester and learner, verify the
// supporting identities and benchmark query counts. Every command prints JSON
// (bench can also print CSV); failures print {"schema":1,"error":{...}} and
// exit nonzero.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qjunta/qjunta.h"

namespace {

constexpr int kCheckFailed = 10;

struct CliError {
  std::string code;
  std::string message;
  int exit_code;
};

int report_error(const CliError& e) {
  nlohmann::json j = {{"schema", 1}, {"error", {{"code", e.code}, {"message", e.message}}}};
  std::cout << j.dump() << '\n';
  return e.exit_code;
}

void check(qj_status status) {
  if (status != QJ_OK)
    throw CliError{qj_status_name(status), qj_last_error(), static_cast<int>(status)};
}

// Owns a string returned by the library.
struct Text {
  char* p = nullptr;
  ~Text() { qj_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct Instance {
  qj_instance* p = nullptr;
  ~Instance() { qj_instance_free(p); }
};

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw CliError{"io_error", "cannot open '" + out + "' for writing", QJ_ERR_IO};
  f << text;
  if (text.empty() || text.back() != '\n') f << '\n';
  if (!f) throw CliError{"io_error", "failed writing '" + out + "'", QJ_ERR_IO};
}

std::uint64_t effective_seed(std::uint64_t seed) {
  const char* env = std::getenv("QJUNTA_SEED");
  if (!env || !*env) return seed;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used, 0);
    if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw CliError{"invalid_argument", std::string("QJUNTA_SEED is not an integer: ") + env,
                   QJ_ERR_INVALID_ARGUMENT};
  }
}

qj_backend backend_of(const std::string& name) {
  return name == "measurement" ? QJ_BACKEND_MEASUREMENT : QJ_BACKEND_EXACT;
}

void require_json(const std::string& format) {
  if (format != "json")
    throw CliError{"invalid_argument", "this command only supports --format json",
                   QJ_ERR_INVALID_ARGUMENT};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum junta tester and learner simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qj_version()));

  qj_options opts;
  qj_options_default(&opts);
  std::uint64_t seed = 0;
  std::string out, format = "json", backend = "exact";

  auto add_run_flags = [&](CLI::App* cmd) {
    cmd->add_option("--k", opts.k, "Junta size k")->check(CLI::PositiveNumber);
    cmd->add_option("--eps", opts.eps, "Distance parameter in (0, 1]");
    cmd->add_option("--trials", opts.trials, "Independent trials")->check(CLI::NonNegativeNumber);
    cmd->add_option("--threads", opts.threads, "Worker threads (0: all cores)");
  };
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "Base seed (QJUNTA_SEED overrides)");
    cmd->add_option("--out", out, "Write output here instead of stdout");
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  std::string kind, family;
  int gen_n = 0;
  gen->add_option("kind", kind, "junta | boolean | dense")->required()
      ->check(CLI::IsMember({"junta", "boolean", "dense"}));
  gen->add_option("family", family, "haar | identity | parity-m | random");
  gen->add_option("--n", gen_n, "Qubit count");
  gen->add_option("--k", opts.k, "Support size for junta instances");
  add_common(gen);

  // test
  auto* test = app.add_subcommand("test", "Run the junta tester");
  std::string instance_path;
  test->add_option("instance", instance_path, "Instance JSON file")->required();
  add_run_flags(test);
  add_common(test);
  test->add_option("--c-aa", opts.c_aa, "Amplification constant");
  test->add_option("--c-ggt", opts.c_ggt, "Group-testing constant");

  // learn
  auto* learn = app.add_subcommand("learn", "Run the junta learner");
  std::string learned_out;
  learn->add_option("instance", instance_path, "Instance JSON file")->required();
  add_run_flags(learn);
  add_common(learn);
  learn->add_option("--backend", backend, "Tomography backend")
      ->check(CLI::IsMember({"exact", "measurement"}));
  learn->add_option("--learned-out", learned_out, "Write the learned junta here");
  learn->add_option("--c-l", opts.c_l, "Copy-count constant");
  learn->add_option("--c-t", opts.c_t, "Tomography constant");

  // verify
  auto* verify = app.add_subcommand("verify", "Run invariant and calibration suites");
  std::string suite = "all";
  verify->add_option("suite", suite, "core | lower-bound | calibration | all")
      ->check(CLI::IsMember({"core", "lower-bound", "calibration", "all"}));
  add_common(verify);

  // bench
  auto* bench = app.add_subcommand("bench", "Query counts against k");
  std::vector<int> ks;
  std::string algorithm = "both";
  bench->add_option("--k", ks, "k values (comma separated)")->delimiter(',');
  bench->add_option("--algorithm", algorithm, "tester | learner | both")
      ->check(CLI::IsMember({"tester", "learner", "both"}));
  bench->add_option("--eps", opts.eps, "Distance parameter in (0, 1]");
  bench->add_option("--trials", opts.trials, "Trials per k")->check(CLI::NonNegativeNumber);
  bench->add_option("--threads", opts.threads, "Worker threads (0: all cores)");
  bench->add_option("--backend", backend, "Tomography backend for the learner")
      ->check(CLI::IsMember({"exact", "measurement"}));
  add_common(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error({"invalid_argument", e.what(), QJ_ERR_INVALID_ARGUMENT});
  }

  try {
    opts.seed = effective_seed(seed);
    opts.backend = backend_of(backend);

    if (*gen) {
      require_json(format);
      Instance inst;
      if (gen_n <= 0 && family.rfind("parity-", 0) == 0) gen_n = std::stoi(family.substr(7));
      check(qj_instance_generate(kind.c_str(), family.c_str(), gen_n, opts.k, opts.seed, &inst.p));
      Text text;
      check(qj_instance_to_json(inst.p, &text.p));
      emit(text.str(), out);
      return 0;
    }

    if (*test || *learn) {
      require_json(format);
      Instance inst;
      check(qj_instance_load(instance_path.c_str(), &inst.p));
      Text report;
      if (*test) {
        check(qj_run_test(inst.p, &opts, &report.p));
      } else {
        Instance learned;
        check(qj_run_learn(inst.p, &opts, &report.p, &learned.p));
        if (!learned_out.empty()) {
          if (!learned.p)
            throw CliError{"insufficient_copies", "no trial produced a learned junta",
                           QJ_ERR_INSUFFICIENT_COPIES};
          check(qj_instance_save(learned.p, learned_out.c_str()));
        }
      }
      emit(report.str(), out);
      return 0;
    }

    if (*verify) {
      require_json(format);
      Text report;
      check(qj_run_verify(suite.c_str(), opts.seed, &report.p));
      emit(report.str(), out);
      return nlohmann::json::parse(report.str())["passed"].get<bool>() ? 0 : kCheckFailed;
    }

    if (*bench) {
      Text report;
      check(qj_run_bench(ks.data(), ks.size(), algorithm.c_str(), &opts, &report.p));
      if (format == "csv") {
        Text csv;
        check(qj_bench_csv(report.p, &csv.p));
        emit(csv.str(), out);
      } else {
        emit(report.str(), out);
      }
      return 0;
    }
  } catch (const CliError& e) {
    return report_error(e);
  } catch (const std::exception& e) {
    return report_error({"invalid_argument", e.what(), QJ_ERR_INVALID_ARGUMENT});
  }
  return 0;
}
