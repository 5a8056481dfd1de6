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

#include "divstream/params.hpp"

#include <cstdlib>
#include <string>
#include <utility>

#include "divstream/errors.hpp"

namespace divstream {

std::int64_t pow_mod(std::int64_t base, std::uint64_t exp, std::int64_t d) {
  std::int64_t b = mod_canonical(base, d);
  std::int64_t result = mod_canonical(1, d);
  while (exp != 0) {
    if (exp & 1) {
      result = result * b % d;
    }
    b = b * b % d;
    exp >>= 1;
  }
  return result;
}

DivisorParams solve_params(std::int64_t d, ParamStrategy strategy) {
  if (d < 3) {
    throw Error(Errc::UnsupportedDivisor,
                "divisor " + std::to_string(d) + " must be at least 3");
  }
  if (d > kMaxDivisor) {
    throw Error(Errc::UnsupportedDivisor,
                "divisor " + std::to_string(d) + " exceeds the supported "
                "maximum " + std::to_string(kMaxDivisor));
  }
  // Least positive m with m*d = -1 (mod 10), by unit digit of d.
  std::int64_t m;
  switch (d % 10) {
    case 1: m = 9; break;
    case 3: m = 3; break;
    case 7: m = 7; break;
    case 9: m = 1; break;
    default:
      throw Error(Errc::UnsupportedDivisor,
                  "divisor " + std::to_string(d) +
                      " has unit digit " + std::to_string(d % 10) +
                      "; supported divisors end in 1, 3, 7 or 9 "
                      "(for 2 and 5, check the unit digit directly)");
  }
  std::int64_t q = (m * d + 1) / 10;
  if (strategy == ParamStrategy::Balanced) {
    // The only other candidate within one period: (m - 10, q - d). Ties keep
    // the positive q.
    const std::int64_t shifted_q = q - d;
    if (std::abs(shifted_q) < std::abs(q)) {
      m -= 10;
      q = shifted_q;
    }
  }
  return DivisorParams{d, m, q};
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = std::abs(a);
  b = std::abs(b);
  if (a == 0 && b == 0) {
    throw Error(Errc::BothZero, "gcd(0, 0) is undefined");
  }
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::int64_t mod_inverse(std::int64_t x, std::int64_t d) {
  if (d < 2) {
    throw Error(Errc::DivisorTooSmall,
                "modulus " + std::to_string(d) + " must be at least 2");
  }
  const std::int64_t a = mod_canonical(x, d);
  if (a == 0) {
    throw Error(Errc::ZeroResidue,
                std::to_string(x) + " is 0 mod " + std::to_string(d));
  }
  std::int64_t r0 = a, r1 = d;
  std::int64_t s0 = 1, s1 = 0;
  while (r1 != 0) {
    const std::int64_t quotient = r0 / r1;
    r0 -= quotient * r1;
    std::swap(r0, r1);
    s0 -= quotient * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1) {
    throw Error(Errc::NotInvertible,
                std::to_string(a) + " is not invertible mod " +
                    std::to_string(d) + " (gcd " + std::to_string(r0) + ")");
  }
  return mod_canonical(s0, d);
}

}  // namespace divstream
