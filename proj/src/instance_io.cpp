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

#include "qjunta/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qjunta/errors.hpp"

namespace qjunta {

using json = nlohmann::json;

const char* to_string(InstanceKind kind) noexcept {
  switch (kind) {
    case InstanceKind::Dense: return "dense";
    case InstanceKind::Junta: return "junta";
    case InstanceKind::Boolean: return "boolean";
  }
  return "unknown";
}

Instance Instance::dense(DenseUnitary u, std::string label) {
  return Instance{InstanceKind::Dense, Unitary(std::move(u)), std::nullopt, std::move(label)};
}

Instance Instance::junta(StructuredJunta u, std::string label) {
  return Instance{InstanceKind::Junta, Unitary(std::move(u)), std::nullopt, std::move(label)};
}

Instance Instance::boolean(const BooleanFunction& f, std::string label) {
  return Instance{InstanceKind::Boolean, Unitary(encode_boolean(f)), f, std::move(label)};
}

namespace {

json matrix_to_json(const Matrix& m) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      entries.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
  return entries;
}

Complex complex_from_json(const json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  require(v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number(),
          ErrorCode::Parse, "complex numbers must be [re, im] pairs");
  return {v[0].get<double>(), v[1].get<double>()};
}

Matrix matrix_from_json(const json& v, int qubits, const char* field) {
  require(v.is_array(), ErrorCode::Parse, std::string(field) + " must be an array");
  const auto d = static_cast<Eigen::Index>(dim_of(qubits));
  std::vector<Complex> flat;
  const bool nested = !v.empty() && v[0].is_array() && !v[0].empty() && v[0][0].is_array();
  if (nested) {
    for (const auto& row : v) {
      require(row.is_array() && static_cast<Eigen::Index>(row.size()) == d, ErrorCode::Parse,
              std::string(field) + " row has the wrong length");
      for (const auto& e : row) flat.push_back(complex_from_json(e));
    }
  } else {
    for (const auto& e : v) flat.push_back(complex_from_json(e));
  }
  require(static_cast<Eigen::Index>(flat.size()) == d * d, ErrorCode::Parse,
          std::string(field) + " must hold 4^" + std::to_string(qubits) + " entries");
  Matrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = flat[static_cast<std::size_t>(i * d + j)];
  return m;
}

Instance from_json(const json& j, const Limits& limits) {
  require(j.is_object(), ErrorCode::Parse, "instance must be a JSON object");
  require(j.contains("n") && j["n"].is_number_integer(), ErrorCode::Parse,
          "instance needs an integer field \"n\"");
  require(j.contains("kind") && j["kind"].is_string(), ErrorCode::Parse,
          "instance needs a string field \"kind\"");
  const int n = j["n"].get<int>();
  require(n >= 1, ErrorCode::InvalidArgument, "instance qubit count must be positive");
  const std::string kind = j["kind"].get<std::string>();
  const std::string label = j.value("label", std::string{});

  if (kind == "dense") {
    require(n <= limits.max_dense_qubits, ErrorCode::LimitExceeded,
            "dense instance exceeds the " + std::to_string(limits.max_dense_qubits) +
                "-qubit cap");
    require(j.contains("entries"), ErrorCode::Parse, "dense instance needs \"entries\"");
    return Instance::dense(DenseUnitary(matrix_from_json(j["entries"], n, "entries"), limits),
                           label);
  }
  if (kind == "junta") {
    require(j.contains("support") && j["support"].is_array(), ErrorCode::Parse,
            "junta instance needs a \"support\" array");
    require(j.contains("core"), ErrorCode::Parse, "junta instance needs \"core\"");
    std::vector<int> support;
    for (const auto& q : j["support"]) {
      require(q.is_number_integer(), ErrorCode::Parse, "support entries must be integers");
      support.push_back(q.get<int>());
    }
    const int k = static_cast<int>(support.size());
    require(k <= limits.max_core_qubits, ErrorCode::LimitExceeded,
            "junta core exceeds the " + std::to_string(limits.max_core_qubits) + "-qubit cap");
    DenseUnitary core(matrix_from_json(j["core"], k, "core"), limits);
    return Instance::junta(StructuredJunta::from_ordered(n, support, core, limits), label);
  }
  if (kind == "boolean") {
    require(j.contains("truth_table") && j["truth_table"].is_string(), ErrorCode::Parse,
            "boolean instance needs a \"truth_table\" string");
    require(n <= limits.max_dense_qubits, ErrorCode::LimitExceeded,
            "boolean instance exceeds the dense qubit cap");
    auto f = BooleanFunction::parse(j["truth_table"].get<std::string>());
    require(f.inputs() == n, ErrorCode::Parse, "truth table length must be 2^n");
    return Instance::boolean(f, label);
  }
  fail(ErrorCode::Parse, "unknown instance kind \"" + kind + "\"");
}

}  // namespace

Instance parse_instance(std::string_view json_text, const Limits& limits) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("malformed instance JSON: ") + e.what());
  }
  return from_json(j, limits);
}

std::string instance_to_json(const Instance& instance, int indent) {
  json j;
  j["schema"] = 1;
  j["n"] = instance.unitary.qubits();
  j["kind"] = to_string(instance.kind);
  if (!instance.label.empty()) j["label"] = instance.label;
  switch (instance.kind) {
    case InstanceKind::Dense:
      j["entries"] = matrix_to_json(instance.unitary.dense().matrix());
      break;
    case InstanceKind::Junta:
      j["support"] = instance.unitary.junta().support().indices();
      j["core"] = matrix_to_json(instance.unitary.junta().core().matrix());
      break;
    case InstanceKind::Boolean:
      require(instance.truth_table.has_value(), ErrorCode::Internal,
              "boolean instance without a truth table");
      j["truth_table"] = instance.truth_table->to_string();
      break;
  }
  return j.dump(indent);
}

Instance load_instance(const std::filesystem::path& path, const Limits& limits) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::Io, "cannot open instance file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str(), limits);
}

void save_instance(const Instance& instance, const std::filesystem::path& path) {
  std::ofstream out(path);
  require(static_cast<bool>(out), ErrorCode::Io, "cannot write instance file " + path.string());
  out << instance_to_json(instance, 2) << '\n';
  require(static_cast<bool>(out), ErrorCode::Io, "failed writing " + path.string());
}

}  // namespace qjunta
