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

#include "divstream/digsum.hpp"

#include <string>

#include "divstream/errors.hpp"

namespace divstream {

namespace {

// Sign-preserving representative of magnitude below d, the convention worked
// tables use for negative intermediates.
std::int64_t mod_balanced(std::int64_t x, std::int64_t d) {
  return x >= 0 ? x % d : -(-x % d);
}

}  // namespace

void Accumulator::push(int digit) {
  if (digit < 0 || digit > 9) {
    throw Error(Errc::InvalidDigit,
                "digit " + std::to_string(digit) + " out of range 0..9");
  }
  if (!started_) {
    current_ = digit % params_.d;
    started_ = true;
  } else {
    current_ = (weight_ * current_ + digit) % params_.d;
  }
  ++digits_consumed_;
}

std::int64_t weighted_digital_sum(const DecimalDigits& digits,
                                  const DivisorParams& params) {
  Accumulator acc(params);
  for (std::uint8_t digit : digits) {
    acc.push(digit);
  }
  return acc.current();
}

std::int64_t weighted_sum_shuffled(const ShuffledRep& rep,
                                   const DivisorParams& params) {
  const std::int64_t d = params.d;
  const std::int64_t weight = mod_canonical(params.q, d);
  std::int64_t current = 0;
  for (std::int64_t coeff : rep.coeffs()) {
    // weight * current stays in [0, d^2); coeff is reduced first so the sum
    // cannot leave 64-bit range even for extreme coefficients.
    current = mod_canonical(weight * current % d + coeff % d, d);
  }
  return current;
}

Verdict is_divisible(const DecimalDigits& digits, std::int64_t d,
                     ParamStrategy strategy) {
  const DivisorParams params = solve_params(d, strategy);
  const std::int64_t terminal = weighted_digital_sum(digits, params);
  Verdict verdict;
  verdict.divisible = terminal == 0;
  verdict.terminal_c = terminal;
  verdict.digit_count = digits.size();
  return verdict;
}

Verdict recover_remainder(const DecimalDigits& digits, std::int64_t d,
                          ParamStrategy strategy) {
  const DivisorParams params = solve_params(d, strategy);
  const std::int64_t terminal = weighted_digital_sum(digits, params);
  Verdict verdict;
  verdict.divisible = terminal == 0;
  verdict.terminal_c = terminal;
  verdict.digit_count = digits.size();
  if (terminal == 0) {
    verdict.remainder = 0;
  } else {
    // C = r * q^n (mod d) with n the top digit index of the normalized
    // numeral; q^n is invertible because gcd(q, d) = 1.
    const std::int64_t qn = pow_mod(params.q, digits.top_index(), d);
    verdict.remainder = terminal * mod_inverse(qn, d) % d;
  }
  return verdict;
}

StepTrace trace(const DecimalDigits& digits, const DivisorParams& params,
                DisplayMode display) {
  const std::int64_t d = params.d;
  const auto reduce = [&](std::int64_t x) {
    return display == DisplayMode::Canonical ? mod_canonical(x, d)
                                             : mod_balanced(x, d);
  };
  StepTrace result{params, display, {}};
  result.rows.reserve(digits.size());
  std::int64_t carry = 0;  // displayed product residue of the previous row
  bool first = true;
  for (std::uint8_t digit : digits) {
    StepRow row;
    row.digit = digit;
    const std::int64_t sum = first ? digit : carry + digit;
    if (!first) {
      row.sum = sum;
    }
    row.residue = reduce(sum);
    row.product = params.q * row.residue;
    row.product_residue = reduce(row.product);
    carry = row.product_residue;
    first = false;
    result.rows.push_back(row);
  }
  return result;
}

}  // namespace divstream
