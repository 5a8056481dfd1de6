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

#include "divstream/bench.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <random>
#include <sstream>

#include "divstream/digsum.hpp"
#include "divstream/errors.hpp"
#include "divstream/oracle.hpp"
#include "divstream/params.hpp"

namespace divstream {

namespace {

std::uint64_t fnv1a_digest(const DecimalDigits& digits) {
  std::uint64_t hash = 1469598103934665603ull;
  for (std::uint8_t digit : digits) {
    hash ^= digit;
    hash *= 1099511628211ull;
  }
  return hash;
}

double median(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  if (samples.size() % 2 == 1) {
    return samples[mid];
  }
  return (samples[mid - 1] + samples[mid]) / 2.0;
}

MethodTiming make_timing(std::string name, std::vector<double> seconds,
                         std::size_t digit_count) {
  const double med = median(std::move(seconds));
  // Sub-nanosecond medians only happen for degenerate inputs; avoid an
  // infinite rate in the report.
  const double rate = static_cast<double>(digit_count) / std::max(med, 1e-9);
  return MethodTiming{std::move(name), med, rate};
}

}  // namespace

DecimalDigits random_numeral(std::size_t digit_count, std::uint64_t seed) {
  assert(digit_count >= 1);
  std::mt19937_64 gen(seed);
  std::vector<std::uint8_t> digits(digit_count);
  // Top digit first, then the rest in written order. Modulo draws keep the
  // sequence identical across standard libraries.
  digits[digit_count - 1] = static_cast<std::uint8_t>(1 + gen() % 9);
  for (std::size_t k = digit_count - 1; k-- > 0;) {
    digits[k] = static_cast<std::uint8_t>(gen() % 10);
  }
  return DecimalDigits::from_digits(std::move(digits));
}

BenchReport run_bench(std::size_t digit_count,
                      const std::vector<std::int64_t>& divisors,
                      std::uint64_t seed, std::size_t iterations) {
  assert(digit_count >= 1 && iterations >= 1 && !divisors.empty());
  using clock = std::chrono::steady_clock;

  // Resolve parameters up front so an unsupported divisor fails before any
  // timing runs.
  std::vector<DivisorParams> min_positive;
  std::vector<DivisorParams> balanced;
  min_positive.reserve(divisors.size());
  balanced.reserve(divisors.size());
  for (std::int64_t d : divisors) {
    min_positive.push_back(solve_params(d, ParamStrategy::MinPositive));
    balanced.push_back(solve_params(d, ParamStrategy::Balanced));
  }

  // One deterministic numeral per iteration, shared by every divisor and
  // method so the comparison is like for like.
  std::mt19937_64 seeder(seed);
  std::vector<DecimalDigits> inputs;
  inputs.reserve(iterations);
  for (std::size_t i = 0; i < iterations; ++i) {
    inputs.push_back(random_numeral(digit_count, seeder()));
  }

  BenchReport report;
  report.digit_count = digit_count;
  report.seed = seed;
  report.iterations = iterations;

  for (std::size_t i = 0; i < divisors.size(); ++i) {
    std::vector<double> weighted_min_seconds, weighted_bal_seconds,
        naive_seconds;
    for (const DecimalDigits& input : inputs) {
      auto t0 = clock::now();
      const std::int64_t c_min = weighted_digital_sum(input, min_positive[i]);
      auto t1 = clock::now();
      const std::int64_t c_bal = weighted_digital_sum(input, balanced[i]);
      auto t2 = clock::now();
      const std::int64_t naive = naive_remainder(input, divisors[i]);
      auto t3 = clock::now();

      if ((c_min == 0) != (naive == 0) || (c_bal == 0) != (naive == 0)) {
        std::ostringstream message;
        message << "divisibility disagreement for d=" << divisors[i]
                << " on input digest=" << std::hex << fnv1a_digest(input);
        throw Error(Errc::AgreementFailure, message.str());
      }

      weighted_min_seconds.push_back(
          std::chrono::duration<double>(t1 - t0).count());
      weighted_bal_seconds.push_back(
          std::chrono::duration<double>(t2 - t1).count());
      naive_seconds.push_back(std::chrono::duration<double>(t3 - t2).count());
    }
    DivisorTiming timing;
    timing.divisor = divisors[i];
    timing.methods.push_back(make_timing(
        "weighted_minpositive", std::move(weighted_min_seconds), digit_count));
    timing.methods.push_back(make_timing(
        "weighted_balanced", std::move(weighted_bal_seconds), digit_count));
    timing.methods.push_back(
        make_timing("naive", std::move(naive_seconds), digit_count));
    report.divisors.push_back(std::move(timing));
  }
  report.agreement = true;
  return report;
}

}  // namespace divstream
