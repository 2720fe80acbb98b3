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

#include <stdexcept>
#include <string>
#include <string_view>

namespace ringcyclic {

enum class Errc {
  kInvalidSpec,
  kSpecMismatch,
  kZeroInversion,
  kLimitExceeded,
  kDivisionByZero,
  kBothZero,
  kZeroPolynomial,
  kNotCoprime,
  kNotADivisor,
  kNotIdempotent,
  kNotIdempotentComponents,
  kMixedParameters,
  kNotInSubring,
  kParseError,
  kInvalidArgument,
  kInternal,
};

constexpr std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kInvalidSpec: return "InvalidSpec";
    case Errc::kSpecMismatch: return "SpecMismatch";
    case Errc::kZeroInversion: return "ZeroInversion";
    case Errc::kLimitExceeded: return "LimitExceeded";
    case Errc::kDivisionByZero: return "DivisionByZeroPoly";
    case Errc::kBothZero: return "BothZero";
    case Errc::kZeroPolynomial: return "ZeroPolynomial";
    case Errc::kNotCoprime: return "NotCoprime";
    case Errc::kNotADivisor: return "NotADivisor";
    case Errc::kNotIdempotent: return "NotIdempotent";
    case Errc::kNotIdempotentComponents: return "NotIdempotentComponents";
    case Errc::kMixedParameters: return "MixedParameters";
    case Errc::kNotInSubring: return "NotInSubring";
    case Errc::kParseError: return "ParseError";
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kInternal: return "Internal";
  }
  return "Unknown";
}

// All library failures are reported through this type; code() identifies the
// condition so callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Construction-time invariant checks that are cheap enough to keep in release
// builds throw kInternal; the heavier cross-checks are gated behind
// RINGCYCLIC_DCHECK.
#define RINGCYCLIC_CHECK(cond, msg)                                     \
  do {                                                                  \
    if (!(cond)) {                                                      \
      throw ::ringcyclic::Error(::ringcyclic::Errc::kInternal,          \
                                std::string("check failed: ") + (msg)); \
    }                                                                   \
  } while (false)

#if !defined(NDEBUG) || defined(RINGCYCLIC_ENABLE_CHECKS)
#define RINGCYCLIC_DCHECK(cond, msg) RINGCYCLIC_CHECK(cond, msg)
#define RINGCYCLIC_DCHECKS_ENABLED 1
#else
#define RINGCYCLIC_DCHECK(cond, msg) \
  do {                               \
  } while (false)
#define RINGCYCLIC_DCHECKS_ENABLED 0
#endif

}  // namespace ringcyclic
