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
#include <vector>

#include "divstream/digits.hpp"

namespace divstream {

struct MethodTiming {
  std::string method;  // "weighted_minpositive", "weighted_balanced", "naive"
  double median_seconds = 0.0;
  double digits_per_second = 0.0;
};

struct DivisorTiming {
  std::int64_t divisor = 0;
  std::vector<MethodTiming> methods;
};

struct BenchReport {
  std::size_t digit_count = 0;
  std::uint64_t seed = 0;
  std::size_t iterations = 0;
  std::vector<DivisorTiming> divisors;
  bool agreement = false;  // always true on a returned report
};

// Deterministic numeral with `digit_count` digits and a nonzero leading
// digit, drawn from an explicitly seeded mt19937_64. Same seed, same numeral,
// on every platform.
DecimalDigits random_numeral(std::size_t digit_count, std::uint64_t seed);

// Times the weighted fold (both strategies) and the naive long-division fold
// on `iterations` generated numerals, one batch per divisor, single-threaded.
// Every instance is checked for predicate agreement between the three
// methods; any disagreement aborts with Errc::AgreementFailure carrying a
// digest of the failing numeral and the divisor. Reported times are medians
// over the iterations.
BenchReport run_bench(std::size_t digit_count,
                      const std::vector<std::int64_t>& divisors,
                      std::uint64_t seed, std::size_t iterations);

}  // namespace divstream
