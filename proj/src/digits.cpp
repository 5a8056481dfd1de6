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

#include "divstream/digits.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <utility>

#include "divstream/errors.hpp"

namespace divstream {

namespace {

// Nonzero coefficients above this index cannot contribute to a value that
// fits 64 bits, whatever their sign pattern adds up to at lower indices is
// checked separately.
constexpr std::size_t kMaxEvalIndex = 18;

// Running totals are kept within +/- 2^126 so the next 10^18 * int64 term
// cannot wrap the 128-bit intermediate.
constexpr __int128 kEvalGuard = static_cast<__int128>(1) << 126;

}  // namespace

DecimalDigits DecimalDigits::parse(std::string_view text) {
  if (text.empty()) {
    throw Error(Errc::EmptyInput, "empty input");
  }
  std::size_t begin = 0;
  if (text[0] == '+') {
    begin = 1;
  }
  if (begin == text.size()) {
    throw Error(Errc::EmptyInput, "no digits after sign");
  }
  for (std::size_t i = begin; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw Error(Errc::InvalidCharacter,
                  "invalid character at offset " + std::to_string(i), i);
    }
  }
  std::size_t first = begin;
  while (first + 1 < text.size() && text[first] == '0') {
    ++first;
  }
  std::vector<std::uint8_t> digits;
  digits.reserve(text.size() - first);
  for (std::size_t i = text.size(); i-- > first;) {
    digits.push_back(static_cast<std::uint8_t>(text[i] - '0'));
  }
  return DecimalDigits(std::move(digits));
}

DecimalDigits DecimalDigits::from_value(std::uint64_t value) {
  std::vector<std::uint8_t> digits;
  do {
    digits.push_back(static_cast<std::uint8_t>(value % 10));
    value /= 10;
  } while (value != 0);
  return DecimalDigits(std::move(digits));
}

DecimalDigits DecimalDigits::from_digits(std::vector<std::uint8_t> unit_first) {
  if (unit_first.empty()) {
    throw Error(Errc::EmptyInput, "empty digit sequence");
  }
  for (std::uint8_t digit : unit_first) {
    if (digit > 9) {
      throw Error(Errc::InvalidDigit,
                  "digit value " + std::to_string(digit) + " out of range");
    }
  }
  while (unit_first.size() > 1 && unit_first.back() == 0) {
    unit_first.pop_back();
  }
  return DecimalDigits(std::move(unit_first));
}

std::string DecimalDigits::to_string() const {
  std::string out;
  out.reserve(digits_.size());
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
    out.push_back(static_cast<char>('0' + *it));
  }
  return out;
}

ShuffledRep::ShuffledRep(std::vector<std::int64_t> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw Error(Errc::EmptyInput, "empty coefficient sequence");
  }
}

ShuffledRep to_shuffled(const DecimalDigits& digits) {
  std::vector<std::int64_t> coeffs(digits.digits().begin(),
                                   digits.digits().end());
  return ShuffledRep(std::move(coeffs));
}

ShuffledRep apply_basic_shuffle(const ShuffledRep& rep, std::size_t r,
                                ShuffleDirection direction) {
  if (r < 1 || r > rep.top_index()) {
    throw Error(Errc::IndexOutOfRange,
                "shuffle position " + std::to_string(r) +
                    " outside 1.." + std::to_string(rep.top_index()));
  }
  std::vector<std::int64_t> coeffs = rep.coeffs();
  if (direction == ShuffleDirection::Down) {
    coeffs[r] -= 1;
    coeffs[r - 1] += 10;
  } else {
    coeffs[r] += 1;
    coeffs[r - 1] -= 10;
  }
  return ShuffledRep(std::move(coeffs));
}

ShuffledRep random_shuffle(const ShuffledRep& rep, std::size_t steps,
                           std::uint64_t seed) {
  const std::size_t n = rep.top_index();
  if (n == 0 || steps == 0) {
    return rep;
  }
  std::mt19937_64 gen(seed);
  std::vector<std::int64_t> coeffs = rep.coeffs();
  for (std::size_t i = 0; i < steps; ++i) {
    // gen() % n keeps the draw identical across standard libraries.
    const std::size_t r = 1 + static_cast<std::size_t>(gen() % n);
    if ((gen() & 1) == 0) {
      coeffs[r] -= 1;
      coeffs[r - 1] += 10;
    } else {
      coeffs[r] += 1;
      coeffs[r - 1] -= 10;
    }
  }
  return ShuffledRep(std::move(coeffs));
}

std::int64_t evaluate(const ShuffledRep& rep) {
  __int128 sum = 0;
  __int128 pow = 1;
  const auto& coeffs = rep.coeffs();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k > kMaxEvalIndex) {
      if (coeffs[k] != 0) {
        throw Error(Errc::Overflow,
                    "nonzero coefficient at index " + std::to_string(k) +
                        " exceeds the evaluation limit");
      }
      continue;
    }
    sum += pow * static_cast<__int128>(coeffs[k]);
    if (sum > kEvalGuard || sum < -kEvalGuard) {
      throw Error(Errc::Overflow, "value exceeds the 64-bit evaluation limit");
    }
    if (k < kMaxEvalIndex) {
      pow *= 10;
    }
  }
  if (sum > std::numeric_limits<std::int64_t>::max() ||
      sum < std::numeric_limits<std::int64_t>::min()) {
    throw Error(Errc::Overflow, "value exceeds the 64-bit evaluation limit");
  }
  return static_cast<std::int64_t>(sum);
}

}  // namespace divstream
