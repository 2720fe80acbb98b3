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

// Test-only fault injection. Compiled out unless RINGCYCLIC_FAULT_INJECTION is
// defined; the negative-control build of the CLI and the acceptance suite
// enable it to show that verification detects a broken construction.

#include <atomic>
#include <optional>
#include <string_view>

namespace ringcyclic::detail {

enum class Fault {
  kNone,
  // reciprocal() skips its monic normalization.
  kReciprocalSkipsMonic,
};

inline std::optional<Fault> parse_fault(std::string_view name) {
  if (name == "none") return Fault::kNone;
  if (name == "reciprocal-nonmonic") return Fault::kReciprocalSkipsMonic;
  return std::nullopt;
}

#if defined(RINGCYCLIC_FAULT_INJECTION)
inline constexpr bool kFaultInjectionAvailable = true;

inline std::atomic<Fault>& active_fault() {
  static std::atomic<Fault> fault{Fault::kNone};
  return fault;
}

inline bool fault_active(Fault f) { return active_fault().load() == f; }

// Installs a fault for the lifetime of the guard.
class ScopedFault {
 public:
  explicit ScopedFault(Fault f) : previous_(active_fault().exchange(f)) {}
  ~ScopedFault() { active_fault().store(previous_); }
  ScopedFault(const ScopedFault&) = delete;
  ScopedFault& operator=(const ScopedFault&) = delete;

 private:
  Fault previous_;
};
#else
inline constexpr bool kFaultInjectionAvailable = false;

constexpr bool fault_active(Fault) { return false; }
#endif

}  // namespace ringcyclic::detail
