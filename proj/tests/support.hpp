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

#include <cstdint>
#include <random>
#include <vector>

#include "ringcyclic/gf.hpp"
#include "ringcyclic/poly.hpp"
#include "ringcyclic/ring_r.hpp"

namespace ringcyclic::testing {

inline constexpr std::uint64_t kSeed = 20260101;
inline constexpr int kPropertyCases = 1000;

inline FieldElement random_element(std::mt19937_64& rng, const Field& f) {
  return FieldElement{static_cast<std::uint32_t>(rng() % f.order())};
}

inline FieldElement random_nonzero(std::mt19937_64& rng, const Field& f) {
  return FieldElement{static_cast<std::uint32_t>(1 + rng() % (f.order() - 1))};
}

inline Poly random_poly(std::mt19937_64& rng, const Field& f, std::size_t max_degree) {
  std::vector<FieldElement> c(1 + rng() % (max_degree + 1));
  for (auto& x : c) x = random_element(rng, f);
  return Poly(f, std::move(c));
}

inline RingElement random_ring_element(std::mt19937_64& rng, const RingSpec& ring) {
  std::vector<FieldElement> c(ring.width());
  for (auto& x : c) x = random_element(rng, ring.field());
  return RingElement::from_v_polynomial(ring, c);
}

inline Triple random_triple(std::mt19937_64& rng, const Field& f) {
  return Triple{random_element(rng, f), random_element(rng, f), random_element(rng, f)};
}

// Schoolbook product of two base-p digit vectors reduced by a monic modulus,
// written without the library so it can serve as a reference.
inline std::vector<std::uint32_t> reference_mul(const std::vector<std::uint32_t>& a,
                                                const std::vector<std::uint32_t>& b,
                                                const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
  const std::size_t k = modulus.size() - 1;
  std::vector<std::uint64_t> prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  for (std::size_t d = prod.size(); d-- > k;) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * modulus[i]) % p;
  }
  std::vector<std::uint32_t> out(k, 0);
  for (std::size_t i = 0; i < k && i < prod.size(); ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

}  // namespace ringcyclic::testing
