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

#include "divstream/oracle.hpp"

#include <cassert>
#include <string>

#include "divstream/digsum.hpp"
#include "divstream/errors.hpp"

namespace divstream {

std::int64_t naive_remainder(const DecimalDigits& digits, std::int64_t d) {
  if (d < 2) {
    throw Error(Errc::DivisorTooSmall,
                "divisor " + std::to_string(d) + " must be at least 2");
  }
  std::int64_t remainder = 0;
  const auto& sequence = digits.digits();
  for (auto it = sequence.rbegin(); it != sequence.rend(); ++it) {
    remainder = (10 * remainder + *it) % d;
  }
  return remainder;
}

CheckReport exhaustive_check(std::int64_t d_max, std::uint64_t a_max,
                             ParamStrategy strategy) {
  assert(d_max >= 3 && a_max >= 1);
  std::vector<std::int64_t> divisors;
  for (std::int64_t d = 3; d <= d_max; ++d) {
    const std::int64_t unit = d % 10;
    if (unit == 1 || unit == 3 || unit == 7 || unit == 9) {
      divisors.push_back(d);
    }
  }
  CheckReport report;
  report.divisors_tested = divisors.size();
  for (std::uint64_t number = 0; number < a_max; ++number) {
    const DecimalDigits digits = DecimalDigits::from_value(number);
    ++report.numbers_tested;
    for (std::int64_t d : divisors) {
      const std::int64_t expected = naive_remainder(digits, d);
      const Verdict verdict = is_divisible(digits, d, strategy);
      const Verdict recovered = recover_remainder(digits, d, strategy);
      if (verdict.divisible != (expected == 0) ||
          recovered.remainder != expected) {
        report.mismatches.push_back(Mismatch{
            number, d, verdict.divisible, recovered.remainder.value_or(-1),
            expected});
      }
    }
  }
  return report;
}

}  // namespace divstream
