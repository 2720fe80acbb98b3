// Copyright 2026 The ringcyclic Authors.
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

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>

#include "ringcyclic/errors.hpp"

namespace ringcyclic {

inline constexpr std::uint64_t kFieldEnumerationLimit = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kDefaultEnumerationLimit = std::uint64_t{1}
                                                          << 22;
inline constexpr std::uint64_t kHardEnumerationCeiling = std::uint64_t{1}
                                                         << 26;

// Upper bound on the number of elements any single exhaustive enumeration may
// produce or scan. Values above the hard ceiling are clamped to it.
class EnumerationLimit {
 public:
  constexpr EnumerationLimit() = default;
  constexpr explicit EnumerationLimit(std::uint64_t value)
      : value_(value > kHardEnumerationCeiling ? kHardEnumerationCeiling
                                               : value) {}

  constexpr std::uint64_t value() const noexcept { return value_; }

  // Reads RINGCYCLIC_LIMIT; falls back to the default when unset.
  static EnumerationLimit from_env() {
    const char* raw = std::getenv("RINGCYCLIC_LIMIT");
    if (raw == nullptr || *raw == '\0') return EnumerationLimit{};
    std::string_view text(raw);
    std::uint64_t parsed = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                     parsed);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw Error(Errc::kParseError,
                  "RINGCYCLIC_LIMIT is not an unsigned integer: " +
                      std::string(text));
    }
    return EnumerationLimit{parsed};
  }

  // Throws kLimitExceeded if `count` elements would exceed the limit.
  void require(std::uint64_t count, std::string_view what) const {
    if (count > value_) {
      throw Error(Errc::kLimitExceeded,
                  std::string(what) + " needs " + std::to_string(count) +
                      " elements, limit is " + std::to_string(value_));
    }
  }

 private:
  std::uint64_t value_ = kDefaultEnumerationLimit;
};

namespace detail {

// Integer power that reports overflow through `overflow` instead of wrapping.
inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp,
                                 bool& overflow) {
  std::uint64_t result = 1;
  overflow = false;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > UINT64_MAX / base) {
      overflow = true;
      return UINT64_MAX;
    }
    result *= base;
  }
  return result;
}

// Power that throws kLimitExceeded on overflow or if the result exceeds limit.
inline std::uint64_t bounded_pow(std::uint64_t base, std::uint64_t exp,
                                 const EnumerationLimit& limit,
                                 std::string_view what) {
  bool overflow = false;
  const std::uint64_t value = checked_pow(base, exp, overflow);
  if (overflow) {
    throw Error(Errc::kLimitExceeded,
                std::string(what) + " size overflows 64 bits");
  }
  limit.require(value, what);
  return value;
}

}  // namespace detail
}  // namespace ringcyclic
