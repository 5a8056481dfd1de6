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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "divstream/digits.hpp"
#include "divstream/digsum.hpp"
#include "divstream/errors.hpp"
#include "divstream/params.hpp"

using namespace divstream;

namespace {

bool has_valid_unit_digit(std::int64_t d) {
  const std::int64_t unit = d % 10;
  return unit == 1 || unit == 3 || unit == 7 || unit == 9;
}

std::vector<std::int64_t> residue_column(const StepTrace& trace) {
  std::vector<std::int64_t> out;
  for (const StepRow& row : trace.rows) {
    out.push_back(row.residue);
  }
  return out;
}

std::vector<std::int64_t> product_column(const StepTrace& trace) {
  std::vector<std::int64_t> out;
  for (const StepRow& row : trace.rows) {
    out.push_back(row.product);
  }
  return out;
}

std::vector<std::int64_t> product_residue_column(const StepTrace& trace) {
  std::vector<std::int64_t> out;
  for (const StepRow& row : trace.rows) {
    out.push_back(row.product_residue);
  }
  return out;
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected divstream::Error");
  return Errc::EmptyInput;
}

}  // namespace

TEST_CASE("accumulator follows the worked seven table") {
  Accumulator acc(solve_params(7, ParamStrategy::MinPositive));
  CHECK_FALSE(acc.started());
  acc.push(1);
  CHECK(acc.current() == 1);
  acc.push(4);
  CHECK(acc.current() == 2);
  acc.push(9);
  CHECK(acc.current() == 5);
  acc.push(3);
  CHECK(acc.current() == 0);
  CHECK(acc.digits_consumed() == 4);
  CHECK(acc.started());
}

TEST_CASE("accumulator basics and edge digits") {
  const DivisorParams params29 = solve_params(29, ParamStrategy::MinPositive);
  Accumulator acc(params29);
  acc.push(2);
  CHECK(acc.current() == 2);

  // Zero state absorbs zero digits.
  Accumulator zero(solve_params(7, ParamStrategy::MinPositive));
  zero.push(0);
  CHECK(zero.current() == 0);
  zero.push(0);
  CHECK(zero.current() == 0);

  Accumulator bad(solve_params(7, ParamStrategy::MinPositive));
  CHECK(code_of([&] { bad.push(10); }) == Errc::InvalidDigit);
  CHECK(code_of([&] { bad.push(-1); }) == Errc::InvalidDigit);
}

TEST_CASE("negative weights reduce to the same canonical states") {
  // q = -2 is congruent to 5 mod 7, so the state sequences coincide.
  Accumulator plus(solve_params(7, ParamStrategy::MinPositive));
  Accumulator minus(solve_params(7, ParamStrategy::Balanced));
  std::mt19937_64 gen(5);
  for (int step = 0; step < 200; ++step) {
    const int digit = static_cast<int>(gen() % 10);
    plus.push(digit);
    minus.push(digit);
    REQUIRE(plus.current() == minus.current());
    REQUIRE(minus.current() >= 0);
    REQUIRE(minus.current() < 7);
  }
}

TEST_CASE("weighted_digital_sum matches the worked examples") {
  CHECK(weighted_digital_sum(parse_decimal("3941"),
                             solve_params(7, ParamStrategy::MinPositive)) == 0);
  CHECK(weighted_digital_sum(parse_decimal("16762"),
                             solve_params(29, ParamStrategy::MinPositive)) ==
        0);
  CHECK(weighted_digital_sum(parse_decimal("32893"),
                             solve_params(7, ParamStrategy::Balanced)) == 0);
  CHECK(weighted_digital_sum(parse_decimal("32893"),
                             solve_params(7, ParamStrategy::MinPositive)) == 0);

  // Non-divisible case, cross-checked through the remainder relation:
  // 3942 mod 7 = 1 by direct division, and C = r * q^n (mod d) with
  // q = 5, n = 3 gives 125 mod 7 = 6.
  const std::int64_t expected_c = 1 * 125 % 7;
  CHECK(expected_c == 6);
  CHECK(weighted_digital_sum(parse_decimal("3942"),
                             solve_params(7, ParamStrategy::MinPositive)) ==
        expected_c);
}

TEST_CASE("weighted_sum_shuffled is invariant on the worked shuffles") {
  const DivisorParams params7 = solve_params(7, ParamStrategy::MinPositive);
  const DecimalDigits digits154 = parse_decimal("154");
  const std::int64_t direct = weighted_digital_sum(digits154, params7);
  CHECK(weighted_sum_shuffled(ShuffledRep({4, 15, 0}), params7) == direct);
  CHECK(weighted_sum_shuffled(ShuffledRep({4, -5, 2}), params7) == direct);
  CHECK(weighted_sum_shuffled(ShuffledRep({24, 3, 1}), params7) == direct);
  CHECK(weighted_sum_shuffled(to_shuffled(digits154), params7) == direct);
  CHECK(weighted_sum_shuffled(to_shuffled(parse_decimal("0")), params7) == 0);
}

TEST_CASE("a multiple loaded into the unit coefficient folds to zero") {
  // The representation {r*d, 0, ..., 0} of A = r*d.
  for (std::int64_t d : {7, 29, 17, 9, 101}) {
    const DivisorParams params = solve_params(d, ParamStrategy::MinPositive);
    for (std::int64_t r = 1; r <= 20; ++r) {
      std::vector<std::int64_t> coeffs(4, 0);
      coeffs[0] = r * d;
      REQUIRE(weighted_sum_shuffled(ShuffledRep(coeffs), params) == 0);
    }
  }
}

TEST_CASE("is_divisible verdicts carry residue and digit count") {
  const Verdict yes = is_divisible(parse_decimal("3941"), 7,
                                   ParamStrategy::MinPositive);
  CHECK(yes.divisible);
  CHECK(yes.terminal_c == 0);
  CHECK(yes.digit_count == 4);
  CHECK_FALSE(yes.remainder.has_value());

  CHECK(is_divisible(parse_decimal("32893"), 7, ParamStrategy::Balanced)
            .divisible);

  const Verdict no = is_divisible(parse_decimal("1"), 7,
                                  ParamStrategy::MinPositive);
  CHECK_FALSE(no.divisible);
  CHECK(no.terminal_c == 1);

  CHECK(is_divisible(parse_decimal("0"), 7, ParamStrategy::MinPositive)
            .divisible);
  CHECK(code_of([] {
          is_divisible(parse_decimal("4"), 10, ParamStrategy::MinPositive);
        }) == Errc::UnsupportedDivisor);
}

TEST_CASE("recover_remainder inverts the digit-count dependence") {
  const Verdict v = recover_remainder(parse_decimal("3942"), 7,
                                      ParamStrategy::MinPositive);
  CHECK_FALSE(v.divisible);
  CHECK(v.terminal_c == 6);
  CHECK(v.remainder == 1);

  CHECK(recover_remainder(parse_decimal("3941"), 7,
                          ParamStrategy::MinPositive)
            .remainder == 0);

  // For d = 9 the weight is 1, so the remainder is the residue itself.
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t a = gen();
    const Verdict nine =
        recover_remainder(DecimalDigits::from_value(a), 9,
                          ParamStrategy::MinPositive);
    REQUIRE(nine.remainder == nine.terminal_c);
    REQUIRE(nine.remainder == static_cast<std::int64_t>(a % 9));
  }
}

TEST_CASE("remainder recovery agrees with direct division at small scale") {
  for (std::int64_t d = 3; d <= 99; ++d) {
    if (!has_valid_unit_digit(d)) {
      continue;
    }
    for (std::uint64_t a = 0; a < 2000; ++a) {
      const DecimalDigits digits = DecimalDigits::from_value(a);
      for (ParamStrategy strategy :
           {ParamStrategy::MinPositive, ParamStrategy::Balanced}) {
        const Verdict v = recover_remainder(digits, d, strategy);
        REQUIRE(v.remainder == static_cast<std::int64_t>(a % d));
        REQUIRE(v.divisible == (a % d == 0));
      }
    }
  }
}

TEST_CASE("trace reproduces the seven table") {
  const StepTrace t = trace(parse_decimal("3941"),
                            solve_params(7, ParamStrategy::MinPositive),
                            DisplayMode::Canonical);
  REQUIRE(t.rows.size() == 4);
  CHECK(residue_column(t) == std::vector<std::int64_t>{1, 2, 5, 0});
  CHECK(product_residue_column(t) == std::vector<std::int64_t>{5, 3, 4, 0});
  CHECK(product_column(t) == std::vector<std::int64_t>{5, 10, 25, 0});
  CHECK_FALSE(t.rows[0].sum.has_value());
  CHECK(t.rows[1].sum == 9);
  CHECK(t.rows[2].sum == 12);
  CHECK(t.rows[3].sum == 7);
  CHECK(t.rows[0].digit == 1);
  CHECK(t.rows[3].digit == 3);
  CHECK(t.divisible());
}

TEST_CASE("trace reproduces the twenty-nine table") {
  const StepTrace t = trace(parse_decimal("16762"),
                            solve_params(29, ParamStrategy::MinPositive),
                            DisplayMode::Canonical);
  REQUIRE(t.rows.size() == 5);
  CHECK(residue_column(t) == std::vector<std::int64_t>{2, 12, 14, 19, 0});
  CHECK(product_residue_column(t) ==
        std::vector<std::int64_t>{6, 7, 13, 28, 0});
  CHECK(t.rows[4].sum == 29);
  CHECK(t.divisible());
}

TEST_CASE("trace reproduces the negative-weight table in balanced display") {
  const DivisorParams params = solve_params(7, ParamStrategy::Balanced);
  REQUIRE(params.q == -2);
  const StepTrace t =
      trace(parse_decimal("32893"), params, DisplayMode::Balanced);
  REQUIRE(t.rows.size() == 5);
  CHECK(residue_column(t) == std::vector<std::int64_t>{3, 3, 2, -2, 0});
  CHECK(product_column(t) == std::vector<std::int64_t>{-6, -6, -4, 4, 0});
  CHECK(product_residue_column(t) ==
        std::vector<std::int64_t>{-6, -6, -4, 4, 0});
  CHECK_FALSE(t.rows[0].sum.has_value());
  CHECK(t.rows[1].sum == 3);
  CHECK(t.rows[2].sum == 2);
  CHECK(t.rows[3].sum == -2);
  CHECK(t.rows[4].sum == 7);
  CHECK(t.divisible());

  // Same number through the positive weight for comparison.
  const StepTrace u = trace(parse_decimal("32893"),
                            solve_params(7, ParamStrategy::MinPositive),
                            DisplayMode::Canonical);
  CHECK(residue_column(u) == std::vector<std::int64_t>{3, 3, 2, 5, 0});
}

TEST_CASE("canonical trace residues equal successive accumulator states") {
  std::mt19937_64 gen(37);
  for (int trial = 0; trial < 300; ++trial) {
    std::int64_t d = 3 + static_cast<std::int64_t>(gen() % 500);
    while (!has_valid_unit_digit(d)) {
      ++d;
    }
    const ParamStrategy strategy =
        (gen() & 1) ? ParamStrategy::Balanced : ParamStrategy::MinPositive;
    const DivisorParams params = solve_params(d, strategy);
    const DecimalDigits digits = DecimalDigits::from_value(gen());
    const StepTrace t = trace(digits, params, DisplayMode::Canonical);
    Accumulator acc(params);
    REQUIRE(t.rows.size() == digits.size());
    for (std::size_t k = 0; k < digits.size(); ++k) {
      acc.push(digits[k]);
      REQUIRE(t.rows[k].residue == acc.current());
    }
  }
}

TEST_CASE("balanced display stays congruent with magnitude below d") {
  std::mt19937_64 gen(41);
  for (int trial = 0; trial < 300; ++trial) {
    std::int64_t d = 3 + static_cast<std::int64_t>(gen() % 200);
    while (!has_valid_unit_digit(d)) {
      ++d;
    }
    const DivisorParams params = solve_params(d, ParamStrategy::Balanced);
    const DecimalDigits digits = DecimalDigits::from_value(gen());
    const StepTrace balanced = trace(digits, params, DisplayMode::Balanced);
    const StepTrace canonical = trace(digits, params, DisplayMode::Canonical);
    REQUIRE(balanced.rows.size() == canonical.rows.size());
    for (std::size_t k = 0; k < balanced.rows.size(); ++k) {
      const std::int64_t shown = balanced.rows[k].residue;
      REQUIRE(std::abs(shown) < d);
      REQUIRE(mod_canonical(shown, d) == canonical.rows[k].residue);
    }
    REQUIRE(balanced.divisible() == canonical.divisible());
  }
}

TEST_CASE("verdict equals long division over a dense small grid") {
  for (std::int64_t d = 3; d <= 59; ++d) {
    if (!has_valid_unit_digit(d)) {
      continue;
    }
    for (std::uint64_t a = 0; a < 20000; ++a) {
      const DecimalDigits digits = DecimalDigits::from_value(a);
      const bool expected = a % d == 0;
      REQUIRE(is_divisible(digits, d, ParamStrategy::MinPositive).divisible ==
              expected);
      REQUIRE(is_divisible(digits, d, ParamStrategy::Balanced).divisible ==
              expected);
    }
  }
}

TEST_CASE("both strategies give the same verdict") {
  for (std::int64_t d = 3; d <= 199; ++d) {
    if (!has_valid_unit_digit(d)) {
      continue;
    }
    for (std::uint64_t a = 0; a < 10000; ++a) {
      const DecimalDigits digits = DecimalDigits::from_value(a);
      REQUIRE(is_divisible(digits, d, ParamStrategy::MinPositive).divisible ==
              is_divisible(digits, d, ParamStrategy::Balanced).divisible);
    }
  }
}

TEST_CASE("shuffling never changes the weighted sum") {
  std::mt19937_64 gen(43);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint64_t a = gen() % 1000000000;
    std::int64_t d = 3 + static_cast<std::int64_t>(gen() % 197);
    while (!has_valid_unit_digit(d)) {
      ++d;
    }
    const ParamStrategy strategy =
        (gen() & 1) ? ParamStrategy::Balanced : ParamStrategy::MinPositive;
    const DivisorParams params = solve_params(d, strategy);
    const DecimalDigits digits = DecimalDigits::from_value(a);
    const ShuffledRep shuffled =
        random_shuffle(to_shuffled(digits), 1 + gen() % 20, gen());
    REQUIRE(weighted_sum_shuffled(shuffled, params) ==
            weighted_digital_sum(digits, params));
    REQUIRE(evaluate(shuffled) == static_cast<std::int64_t>(a));
  }
}

TEST_CASE("digit multiples of the divisor always fold to zero") {
  for (std::int64_t d = 3; d <= 199; ++d) {
    if (!has_valid_unit_digit(d)) {
      continue;
    }
    for (ParamStrategy strategy :
         {ParamStrategy::MinPositive, ParamStrategy::Balanced}) {
      const DivisorParams params = solve_params(d, strategy);
      for (std::int64_t k = 1; k <= 50; ++k) {
        REQUIRE(weighted_digital_sum(
                    DecimalDigits::from_value(
                        static_cast<std::uint64_t>(k * d)),
                    params) == 0);
      }
      // m*d itself is such a multiple.
      REQUIRE(weighted_digital_sum(
                  DecimalDigits::from_value(
                      static_cast<std::uint64_t>(std::abs(params.m * d))),
                  params) == 0);
    }
  }
}
