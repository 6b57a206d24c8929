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
#include <string>
#include <string_view>
#include <vector>

namespace qjunta {

/// f : {0,1}^n -> {0,1} stored as a truth table. Entry i is f(x) where x is the
/// n-bit binary expansion of i with x_1 as the most significant bit.
class BooleanFunction {
 public:
  BooleanFunction() = default;
  /// Throws InvalidArgument when the length is not a power of two.
  explicit BooleanFunction(std::vector<std::uint8_t> table);

  /// Parses a '0'/'1' string such as "01101001".
  static BooleanFunction parse(std::string_view bits);
  static BooleanFunction constant(int n, bool value);
  /// x_1 xor ... xor x_m on n inputs.
  static BooleanFunction parity(int n, int m);
  /// x_i on n inputs.
  static BooleanFunction dictator(int n, int i);

  int inputs() const noexcept { return n_; }
  std::size_t size() const noexcept { return table_.size(); }
  bool operator()(std::size_t x) const { return table_[x] != 0; }
  bool input_bit(std::size_t x, int i) const { return (x >> (n_ - i)) & 1u; }

  BooleanFunction negated() const;
  std::string to_string() const;
  const std::vector<std::uint8_t>& table() const noexcept { return table_; }

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> table_;
};

}  // namespace qjunta
