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
#include <optional>
#include <vector>

#include "divstream/digits.hpp"
#include "divstream/params.hpp"

namespace divstream {

// Incremental d-modded digital sum. Digits are pushed from the unit's place
// upward; the state after k+1 pushes is
//
//   C_0 = a_0 mod d,   C_k = (q * C_{k-1} + a_k) mod d,
//
// always reduced to the canonical residue in [0, d). A negative q is reduced
// to its canonical residue once at construction, which leaves every C_k
// unchanged and keeps each step inside 64-bit range for d <= kMaxDivisor.
//
// Single-owner mutable value: move it between threads freely, but do not
// share one instance across threads.
class Accumulator {
 public:
  explicit Accumulator(const DivisorParams& params)
      : params_(params), weight_(mod_canonical(params.q, params.d)) {}

  // Consumes the next digit. Throws Errc::InvalidDigit outside 0..9.
  void push(int digit);

  std::int64_t current() const noexcept { return current_; }
  std::size_t digits_consumed() const noexcept { return digits_consumed_; }
  bool started() const noexcept { return started_; }
  const DivisorParams& params() const noexcept { return params_; }

 private:
  DivisorParams params_;
  std::int64_t weight_;  // q reduced to [0, d)
  std::int64_t current_ = 0;
  std::size_t digits_consumed_ = 0;
  bool started_ = false;
};

// Terminal residue C of the whole digit sequence. C = 0 iff d divides the
// number.
std::int64_t weighted_digital_sum(const DecimalDigits& digits,
                                  const DivisorParams& params);

// Same fold over a shuffled representation; coefficients may be arbitrary
// integers and each step is reduced to the canonical residue. Equals
// weighted_digital_sum of the represented number for any shuffle that keeps
// the index range.
std::int64_t weighted_sum_shuffled(const ShuffledRep& rep,
                                   const DivisorParams& params);

struct Verdict {
  bool divisible = false;
  std::int64_t terminal_c = 0;          // canonical residue in [0, d)
  std::size_t digit_count = 0;          // n + 1
  std::optional<std::int64_t> remainder;  // set by recover_remainder only

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Divisibility verdict for d under the given parameter strategy. Propagates
// Errc::UnsupportedDivisor from solve_params. The remainder field is left
// unset.
Verdict is_divisible(const DecimalDigits& digits, std::int64_t d,
                     ParamStrategy strategy);

// Verdict with the actual remainder A mod d recovered from the terminal
// residue: C = r * q^n (mod d) with n the top digit index, so
// r = C * (q^n)^-1 mod d. The inversion exists because gcd(q, d) = 1.
Verdict recover_remainder(const DecimalDigits& digits, std::int64_t d,
                          ParamStrategy strategy);

// Residue rendering for step tables. Canonical keeps every entry in [0, d);
// Balanced keeps the sign of the unreduced value with magnitude below d,
// which is how worked tables for negative q are usually written.
enum class DisplayMode {
  Canonical,
  Balanced,
};

struct StepRow {
  int digit = 0;
  std::optional<std::int64_t> sum;  // previous product residue + digit;
                                    // absent on the first row
  std::int64_t residue = 0;
  std::int64_t product = 0;  // q * residue, unreduced
  std::int64_t product_residue = 0;

  friend bool operator==(const StepRow&, const StepRow&) = default;
};

// One row per digit, mirroring the five columns of a worked step table:
// digit | add result of last row | mod d | x q | mod d. Each row's sum is
// the previous row's displayed product residue plus the incoming digit, so
// the Balanced table chains signed values exactly as written by hand. In
// Canonical mode the residue column reproduces successive Accumulator
// states.
struct StepTrace {
  DivisorParams params;
  DisplayMode display = DisplayMode::Canonical;
  std::vector<StepRow> rows;

  bool divisible() const {
    return rows.empty() || rows.back().residue == 0;
  }
};

StepTrace trace(const DecimalDigits& digits, const DivisorParams& params,
                DisplayMode display);

}  // namespace divstream
