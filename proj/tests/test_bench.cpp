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

#include "divstream/bench.hpp"
#include "divstream/digits.hpp"

using namespace divstream;

TEST_CASE("random_numeral is deterministic with a nonzero leading digit") {
  const DecimalDigits a = random_numeral(10000, 99);
  const DecimalDigits b = random_numeral(10000, 99);
  CHECK(a == b);
  CHECK(a.size() == 10000);
  CHECK(a.digits().back() != 0);

  const DecimalDigits c = random_numeral(10000, 100);
  CHECK_FALSE(a == c);

  const DecimalDigits single = random_numeral(1, 5);
  CHECK(single.size() == 1);
  CHECK(single.digits()[0] >= 1);
}

TEST_CASE("degenerate single-digit bench still agrees") {
  const BenchReport report = run_bench(1, {7}, 1, 1);
  CHECK(report.agreement);
  CHECK(report.digit_count == 1);
  CHECK(report.iterations == 1);
  REQUIRE(report.divisors.size() == 1);
  CHECK(report.divisors[0].divisor == 7);
  REQUIRE(report.divisors[0].methods.size() == 3);
  CHECK(report.divisors[0].methods[0].method == "weighted_minpositive");
  CHECK(report.divisors[0].methods[1].method == "weighted_balanced");
  CHECK(report.divisors[0].methods[2].method == "naive");
}

TEST_CASE("multi-divisor bench reports positive throughput") {
  const BenchReport report = run_bench(10000, {7, 29, 17}, 9, 5);
  CHECK(report.agreement);
  REQUIRE(report.divisors.size() == 3);
  for (const DivisorTiming& timing : report.divisors) {
    REQUIRE(timing.methods.size() == 3);
    for (const MethodTiming& method : timing.methods) {
      CHECK(method.median_seconds >= 0.0);
      CHECK(method.digits_per_second > 0.0);
    }
  }
}

TEST_CASE("million-digit inputs agree with the naive fold") {
  const BenchReport report = run_bench(1000000, {7}, 1, 3);
  CHECK(report.agreement);
  REQUIRE(report.divisors.size() == 1);
  for (const MethodTiming& method : report.divisors[0].methods) {
    CHECK(method.digits_per_second > 0.0);
  }
}

TEST_CASE("bench reruns produce identical non-timing fields") {
  const BenchReport first = run_bench(500, {7, 29}, 42, 3);
  const BenchReport second = run_bench(500, {7, 29}, 42, 3);
  CHECK(first.agreement == second.agreement);
  CHECK(first.digit_count == second.digit_count);
  CHECK(first.seed == second.seed);
  CHECK(first.iterations == second.iterations);
  REQUIRE(first.divisors.size() == second.divisors.size());
  for (std::size_t i = 0; i < first.divisors.size(); ++i) {
    CHECK(first.divisors[i].divisor == second.divisors[i].divisor);
  }
}
