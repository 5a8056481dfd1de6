// Copyright 2026 The divstream Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "divstream/digits.hpp"
#include "divstream/params.hpp"

namespace divstream {

// Ground truth by long division: folds r <- (10*r + a) mod d over the digits
// from the most significant end. Independent of the weighted method, down to
// consuming the digits in the opposite order. Throws Errc::DivisorTooSmall
// for d < 2.
std::int64_t naive_remainder(const DecimalDigits& digits, std::int64_t d);

struct Mismatch {
  std::uint64_t number = 0;
  std::int64_t divisor = 0;
  bool weighted_divisible = false;
  std::int64_t weighted_remainder = 0;
  std::int64_t naive_remainder = 0;
};

struct CheckReport {
  std::size_t divisors_tested = 0;
  std::size_t numbers_tested = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const noexcept { return mismatches.empty(); }
};

// Cross-checks is_divisible and recover_remainder against naive_remainder
// for every divisor d <= d_max with unit digit 1, 3, 7 or 9 and every
// number in [0, a_max). Requires d_max >= 3 and a_max >= 1.
CheckReport exhaustive_check(std::int64_t d_max, std::uint64_t a_max,
                             ParamStrategy strategy);

}  // namespace divstream
