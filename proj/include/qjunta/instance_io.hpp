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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "qjunta/boolean.hpp"
#include "qjunta/unitary.hpp"

namespace qjunta {

enum class InstanceKind { Dense, Junta, Boolean };

const char* to_string(InstanceKind kind) noexcept;

/// A hidden unitary as read from or written to an instance file.
///
/// File format (JSON, complex numbers as [re, im] pairs, matrices row-major):
///   {"schema": 1, "n": 3, "kind": "dense",   "entries": [[re, im], ...]}
///   {"schema": 1, "n": 8, "kind": "junta",   "support": [2, 5], "core": [[re, im], ...]}
///   {"schema": 1, "n": 3, "kind": "boolean", "truth_table": "01101001"}
/// Readers also accept matrices given as a list of rows. An optional "label"
/// string is carried through untouched.
struct Instance {
  InstanceKind kind = InstanceKind::Dense;
  Unitary unitary;
  std::optional<BooleanFunction> truth_table;
  std::string label;

  static Instance dense(DenseUnitary u, std::string label = {});
  static Instance junta(StructuredJunta u, std::string label = {});
  static Instance boolean(const BooleanFunction& f, std::string label = {});
};

Instance parse_instance(std::string_view json_text, const Limits& limits = default_limits());
std::string instance_to_json(const Instance& instance, int indent = -1);

Instance load_instance(const std::filesystem::path& path,
                       const Limits& limits = default_limits());
void save_instance(const Instance& instance, const std::filesystem::path& path);

}  // namespace qjunta
