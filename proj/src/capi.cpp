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

#include "qjunta/qjunta.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "qjunta/errors.hpp"
#include "qjunta/experiments.hpp"
#include "qjunta/instance_io.hpp"

struct qj_instance {
  qjunta::Instance value;
};

namespace {

thread_local std::string last_error;

qj_status status_of(qjunta::ErrorCode code) {
  switch (code) {
    case qjunta::ErrorCode::InvalidArgument: return QJ_ERR_INVALID_ARGUMENT;
    case qjunta::ErrorCode::DimensionMismatch: return QJ_ERR_DIMENSION_MISMATCH;
    case qjunta::ErrorCode::LimitExceeded: return QJ_ERR_LIMIT;
    case qjunta::ErrorCode::Parse: return QJ_ERR_PARSE;
    case qjunta::ErrorCode::Io: return QJ_ERR_IO;
    case qjunta::ErrorCode::InsufficientCopies: return QJ_ERR_INSUFFICIENT_COPIES;
    case qjunta::ErrorCode::Internal: return QJ_ERR_INTERNAL;
  }
  return QJ_ERR_INTERNAL;
}

template <class Fn>
qj_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return QJ_OK;
  } catch (const qjunta::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return QJ_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return QJ_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return QJ_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return QJ_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  qjunta::require(p != nullptr, qjunta::ErrorCode::InvalidArgument,
                  std::string(what) + " must not be null");
}

qjunta::ExperimentOptions convert(const qj_options* o) {
  need(o, "options");
  qjunta::ExperimentOptions out;
  out.k = o->k;
  out.eps = o->eps;
  out.trials = o->trials;
  out.seed = o->seed;
  qjunta::require(o->backend == QJ_BACKEND_EXACT || o->backend == QJ_BACKEND_MEASUREMENT,
                  qjunta::ErrorCode::InvalidArgument, "unknown backend");
  out.backend = o->backend == QJ_BACKEND_EXACT ? qjunta::TomographyBackend::Exact
                                               : qjunta::TomographyBackend::Measurement;
  out.c_aa = o->c_aa;
  out.c_ggt = o->c_ggt;
  out.c_l = o->c_l;
  out.c_t = o->c_t;
  out.threads = o->threads;
  return out;
}

}  // namespace

extern "C" {

const char* qj_version(void) { return "0.1.0"; }

const char* qj_last_error(void) { return last_error.c_str(); }

const char* qj_status_name(qj_status status) {
  switch (status) {
    case QJ_OK: return "ok";
    case QJ_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case QJ_ERR_DIMENSION_MISMATCH: return "dimension_mismatch";
    case QJ_ERR_LIMIT: return "limit_exceeded";
    case QJ_ERR_PARSE: return "parse_error";
    case QJ_ERR_IO: return "io_error";
    case QJ_ERR_INSUFFICIENT_COPIES: return "insufficient_copies";
    case QJ_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

void qj_options_default(qj_options* options) {
  if (!options) return;
  const qjunta::ExperimentOptions d;
  options->k = d.k;
  options->eps = d.eps;
  options->trials = d.trials;
  options->seed = d.seed;
  options->backend = QJ_BACKEND_EXACT;
  options->c_aa = d.c_aa;
  options->c_ggt = d.c_ggt;
  options->c_l = d.c_l;
  options->c_t = d.c_t;
  options->threads = d.threads;
}

qj_status qj_instance_load(const char* path, qj_instance** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new qj_instance{qjunta::load_instance(path)};
  });
}

qj_status qj_instance_parse(const char* json, qj_instance** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = new qj_instance{qjunta::parse_instance(json)};
  });
}

qj_status qj_instance_generate(const char* kind, const char* family, int n, int k, uint64_t seed,
                               qj_instance** out) {
  return guarded([&] {
    need(kind, "kind");
    need(out, "out");
    *out = new qj_instance{
        qjunta::generate_instance(kind, family ? family : "", n, k, seed)};
  });
}

qj_status qj_instance_to_json(const qj_instance* instance, char** out) {
  return guarded([&] {
    need(instance, "instance");
    need(out, "out");
    *out = copy_string(qjunta::instance_to_json(instance->value, 2));
  });
}

qj_status qj_instance_save(const qj_instance* instance, const char* path) {
  return guarded([&] {
    need(instance, "instance");
    need(path, "path");
    qjunta::save_instance(instance->value, path);
  });
}

int qj_instance_qubits(const qj_instance* instance) {
  return instance ? instance->value.unitary.qubits() : -1;
}

void qj_instance_free(qj_instance* instance) { delete instance; }

qj_status qj_run_test(const qj_instance* instance, const qj_options* options, char** report) {
  return guarded([&] {
    need(instance, "instance");
    need(report, "report");
    *report = copy_string(qjunta::run_test(instance->value, convert(options)).dump(2));
  });
}

qj_status qj_run_learn(const qj_instance* instance, const qj_options* options, char** report,
                       qj_instance** learned) {
  return guarded([&] {
    need(instance, "instance");
    need(report, "report");
    std::optional<qjunta::Instance> out;
    const auto json = qjunta::run_learn(instance->value, convert(options), &out);
    *report = copy_string(json.dump(2));
    if (learned) *learned = out ? new qj_instance{std::move(*out)} : nullptr;
  });
}

qj_status qj_run_verify(const char* suite, uint64_t seed, char** report) {
  return guarded([&] {
    need(suite, "suite");
    need(report, "report");
    *report = copy_string(qjunta::run_verify(suite, seed).dump(2));
  });
}

qj_status qj_run_bench(const int* ks, size_t count, const char* algorithm,
                       const qj_options* options, char** report) {
  return guarded([&] {
    need(algorithm, "algorithm");
    need(report, "report");
    if (count > 0) need(ks, "ks");
    const std::vector<int> list(ks, ks + count);
    *report = copy_string(qjunta::run_bench(list, algorithm, convert(options)).dump(2));
  });
}

qj_status qj_bench_csv(const char* report, char** csv) {
  return guarded([&] {
    need(report, "report");
    need(csv, "csv");
    *csv = copy_string(qjunta::bench_csv(nlohmann::json::parse(report)));
  });
}

void qj_string_free(char* text) { std::free(text); }

}  // extern "C"
