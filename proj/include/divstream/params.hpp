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

#include <cstdint>

namespace divstream {

// Largest accepted divisor. Keeps every intermediate product q*c + digit
// below 2^62, so plain 64-bit arithmetic is exact throughout.
inline constexpr std::int64_t kMaxDivisor = (std::int64_t{1} << 31) - 1;

// Canonical residue of x in [0, d).
constexpr std::int64_t mod_canonical(std::int64_t x, std::int64_t d) {
  const std::int64_t r = x % d;
  return r < 0 ? r + d : r;
}

// base^exp mod d by square-and-multiply on canonical residues.
std::int64_t pow_mod(std::int64_t base, std::uint64_t exp, std::int64_t d);

// A solution of m*d = 10*q - 1 for a divisor d ending in 1, 3, 7 or 9.
// gcd(|q|, d) = 1 holds for every such triple.
struct DivisorParams {
  std::int64_t d = 0;
  std::int64_t m = 0;
  std::int64_t q = 0;

  friend bool operator==(const DivisorParams&, const DivisorParams&) = default;
};

enum class ParamStrategy {
  MinPositive,  // least m > 0, hence 1 <= q < d
  Balanced,     // q of least magnitude between q and q - d; ties go positive
};

// Solves m*d = 10*q - 1 under the chosen strategy. Accepts 3 <= d <=
// kMaxDivisor with unit digit 1, 3, 7 or 9; anything else throws
// Errc::UnsupportedDivisor. Divisibility by 2 and 5 is read off the unit
// digit directly and is deliberately not handled here.
DivisorParams solve_params(std::int64_t d, ParamStrategy strategy);

// Euclid gcd over nonnegative operands (negative inputs are taken by
// magnitude). Throws Errc::BothZero on (0, 0).
std::int64_t gcd(std::int64_t a, std::int64_t b);

// Multiplicative inverse of x modulo d >= 2 via extended Euclid: returns the
// y in [1, d) with (x * y) mod d = 1, after reducing x to its canonical
// residue. Throws Errc::ZeroResidue when x = 0 (mod d), Errc::NotInvertible
// when gcd(x, d) > 1, and Errc::DivisorTooSmall when d < 2. Exact for
// d <= kMaxDivisor.
std::int64_t mod_inverse(std::int64_t x, std::int64_t d);

}  // namespace divstream
