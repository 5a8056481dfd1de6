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
#include <stdexcept>
#include <string>

namespace divstream {

// Failure categories raised by the library.
enum class Errc {
  EmptyInput,
  InvalidCharacter,
  IndexOutOfRange,
  Overflow,
  UnsupportedDivisor,
  BothZero,
  NotInvertible,
  ZeroResidue,
  InvalidDigit,
  DivisorTooSmall,
  AgreementFailure,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Error(Errc code, const std::string& message, std::size_t offset)
      : std::runtime_error(message), code_(code), offset_(offset) {}

  Errc code() const noexcept { return code_; }

  // 0-based byte offset of the offending character; meaningful only for
  // Errc::InvalidCharacter.
  std::size_t offset() const noexcept { return offset_; }

 private:
  Errc code_;
  std::size_t offset_ = 0;
};

}  // namespace divstream
