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
#include <string>
#include <string_view>
#include <vector>

namespace divstream {

// Base-10 digit sequence of a nonnegative integer. Index k holds the
// coefficient of 10^k, so the unit's digit sits at index 0 and the stored
// order is the reverse of the written numeral. The top digit is nonzero,
// except for the single-digit representation of zero.
class DecimalDigits {
 public:
  // Parses an ASCII numeral, optionally preceded by '+'. Leading zeros are
  // normalized away. Throws Errc::EmptyInput when no digits are present and
  // Errc::InvalidCharacter (carrying the 0-based byte offset) on any other
  // byte.
  static DecimalDigits parse(std::string_view text);

  static DecimalDigits from_value(std::uint64_t value);

  // Builds from unit-first digit values; digits above 9 are rejected with
  // Errc::InvalidDigit and high-order zeros are stripped.
  static DecimalDigits from_digits(std::vector<std::uint8_t> unit_first);

  const std::vector<std::uint8_t>& digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }  // n + 1
  std::size_t top_index() const noexcept { return digits_.size() - 1; }
  std::uint8_t operator[](std::size_t k) const { return digits_[k]; }
  bool is_zero() const noexcept { return digits_.size() == 1 && digits_[0] == 0; }

  // Renders high-to-low, reproducing the canonical numeral.
  std::string to_string() const;

  // Iteration runs from the unit's place upward.
  auto begin() const noexcept { return digits_.begin(); }
  auto end() const noexcept { return digits_.end(); }

  friend bool operator==(const DecimalDigits&, const DecimalDigits&) = default;

 private:
  explicit DecimalDigits(std::vector<std::uint8_t> digits)
      : digits_(std::move(digits)) {}

  std::vector<std::uint8_t> digits_;
};

inline DecimalDigits parse_decimal(std::string_view text) {
  return DecimalDigits::parse(text);
}

// Integer coefficient sequence over the same fixed index range 0..n as the
// number it came from. Coefficients are unrestricted integers; the value
// sum(coeffs[k] * 10^k) is what shuffling preserves.
class ShuffledRep {
 public:
  explicit ShuffledRep(std::vector<std::int64_t> coeffs);

  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::size_t top_index() const noexcept { return coeffs_.size() - 1; }

  friend bool operator==(const ShuffledRep&, const ShuffledRep&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

enum class ShuffleDirection {
  Down,  // coeff[r] -= 1, coeff[r-1] += 10
  Up,    // coeff[r] += 1, coeff[r-1] -= 10
};

// Embeds the regular decimal representation as a shuffled one.
ShuffledRep to_shuffled(const DecimalDigits& digits);

// Applies one basic shuffle at position r, 1 <= r <= top index. The index
// range never changes. Throws Errc::IndexOutOfRange otherwise.
ShuffledRep apply_basic_shuffle(const ShuffledRep& rep, std::size_t r,
                                ShuffleDirection direction);

// Applies `steps` seeded pseudo-random basic shuffles (uniform position and
// direction). Single-coefficient representations have no legal move and come
// back unchanged.
ShuffledRep random_shuffle(const ShuffledRep& rep, std::size_t steps,
                           std::uint64_t seed);

// Evaluates sum(coeffs[k] * 10^k). Desk-scale only: nonzero coefficients may
// sit at index 18 at most and the result must fit a signed 64-bit integer;
// anything larger throws Errc::Overflow. The divisibility pipeline never
// evaluates, so numerals of any length stay in scope elsewhere.
std::int64_t evaluate(const ShuffledRep& rep);

}  // namespace divstream
