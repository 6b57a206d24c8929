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

#include "qjunta/boolean.hpp"

#include <bit>

#include "qjunta/errors.hpp"

namespace qjunta {

BooleanFunction::BooleanFunction(std::vector<std::uint8_t> table) : table_(std::move(table)) {
  require(!table_.empty() && std::has_single_bit(table_.size()), ErrorCode::InvalidArgument,
          "truth table length must be a power of two");
  n_ = std::countr_zero(table_.size());
  for (auto& b : table_) b = b ? 1 : 0;
}

BooleanFunction BooleanFunction::parse(std::string_view bits) {
  std::vector<std::uint8_t> table;
  table.reserve(bits.size());
  for (char c : bits) {
    require(c == '0' || c == '1', ErrorCode::Parse, "truth table must contain only 0 and 1");
    table.push_back(c == '1');
  }
  return BooleanFunction(std::move(table));
}

BooleanFunction BooleanFunction::constant(int n, bool value) {
  return BooleanFunction(std::vector<std::uint8_t>(std::size_t{1} << n, value));
}

BooleanFunction BooleanFunction::parity(int n, int m) {
  require(m >= 0 && m <= n, ErrorCode::InvalidArgument, "parity arity exceeds input count");
  std::vector<std::uint8_t> table(std::size_t{1} << n);
  for (std::size_t x = 0; x < table.size(); ++x) {
    // x_1..x_m are the m most significant bits
    table[x] = std::popcount(x >> (n - m)) & 1;
  }
  return BooleanFunction(std::move(table));
}

BooleanFunction BooleanFunction::dictator(int n, int i) {
  require(i >= 1 && i <= n, ErrorCode::InvalidArgument, "dictator index out of range");
  std::vector<std::uint8_t> table(std::size_t{1} << n);
  for (std::size_t x = 0; x < table.size(); ++x) table[x] = (x >> (n - i)) & 1;
  return BooleanFunction(std::move(table));
}

BooleanFunction BooleanFunction::negated() const {
  auto t = table_;
  for (auto& b : t) b ^= 1;
  return BooleanFunction(std::move(t));
}

std::string BooleanFunction::to_string() const {
  std::string s;
  s.reserve(table_.size());
  for (auto b : table_) s.push_back(b ? '1' : '0');
  return s;
}

}  // namespace qjunta
