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

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ringcyclic/cyclic.hpp"
#include "ringcyclic/errors.hpp"
#include "ringcyclic/limits.hpp"
#include "ringcyclic/poly.hpp"
#include "ringcyclic/ring_poly.hpp"
#include "ringcyclic/ring_r.hpp"

namespace ringcyclic {

// A word of R^n stored coordinate-wise in triple form.
using RCodeword = std::vector<Triple>;

// Code e1 C1 ⊕ e2 C2 ⊕ e3 C3 over R = e1 F ⊕ e2 F ⊕ e3 F built from three
// cyclic codes of a common length over F.
class RCode {
 public:
  static RCode build(const RingSpec& ring, CyclicCode c1, CyclicCode c2, CyclicCode c3) {
    std::array<CyclicCode, 3> comps{std::move(c1), std::move(c2), std::move(c3)};
    for (const CyclicCode& c : comps) {
      if (!(c.field() == ring.field())) {
        throw Error(Errc::kMixedParameters, c.descriptor() + " is not over the field of " + ring.description());
      }
      if (c.n() != comps[0].n()) throw Error(Errc::kMixedParameters, "component codes have different lengths");
    }
    RCode out(ring, std::move(comps));
#if RINGCYCLIC_DCHECKS_ENABLED
    constexpr std::uint64_t kShiftCheckLimit = 4096;
    bool overflow = false;
    const std::uint64_t size =
        detail::checked_pow(ring.field().order(), out.dimension(), overflow);
    if (!overflow && size <= kShiftCheckLimit) {
      for (const RCodeword& w : out.enumerate_codewords()) {
        RINGCYCLIC_DCHECK(out.contains(shift_codeword<Triple>(w)), "R-code is closed under the shift");
      }
    }
#endif
    return out;
  }

  static RCode full(const RingSpec& ring, std::size_t n) {
    return build(ring, CyclicCode::full(ring.field(), n), CyclicCode::full(ring.field(), n),
                 CyclicCode::full(ring.field(), n));
  }

  static RCode zero(const RingSpec& ring, std::size_t n) {
    return build(ring, CyclicCode::zero(ring.field(), n), CyclicCode::zero(ring.field(), n),
                 CyclicCode::zero(ring.field(), n));
  }

  // Reads the descriptor format (ring=, n=, g1=, g2=, g3=, one per line).
  static RCode parse_descriptor(std::string_view text);

  const RingSpec& ring() const noexcept { return ring_; }
  std::size_t n() const noexcept { return components_[0].n(); }
  const std::array<CyclicCode, 3>& components() const noexcept { return components_; }
  // i in {1, 2, 3}.
  const CyclicCode& component(int i) const {
    if (i < 1 || i > 3) throw Error(Errc::kInvalidArgument, "component index must be 1, 2 or 3");
    return components_[static_cast<std::size_t>(i - 1)];
  }

  // log_{p^k} |C| = 3n - deg g1 - deg g2 - deg g3.
  std::size_t dimension() const noexcept {
    return components_[0].dimension() + components_[1].dimension() + components_[2].dimension();
  }

  // |C| = |C1| |C2| |C3| = (p^k)^{3n - Σ deg g_i}.
  std::uint64_t cardinality() const {
    bool overflow = false;
    const std::uint64_t c = detail::checked_pow(ring_.field().order(), dimension(), overflow);
    if (overflow) throw Error(Errc::kLimitExceeded, "code cardinality overflows 64 bits");
    return c;
  }

  bool contains(std::span<const Triple> w) const {
    if (w.size() != n()) return false;
    Word s(n()), t(n()), u(n());
    for (std::size_t i = 0; i < n(); ++i) {
      s[i] = w[i].s;
      t[i] = w[i].t;
      u[i] = w[i].u;
    }
    return components_[0].contains(s) && components_[1].contains(t) && components_[2].contains(u);
  }

  // All codewords e1 c1 + e2 c2 + e3 c3, ordered by (c1, c2, c3) in each
  // component's enumeration order.
  std::vector<RCodeword> enumerate_codewords(EnumerationLimit limit = EnumerationLimit{}) const {
    detail::bounded_pow(ring_.field().order(), dimension(), limit, "R-code enumeration");
    const auto w1 = components_[0].enumerate_codewords(limit);
    const auto w2 = components_[1].enumerate_codewords(limit);
    const auto w3 = components_[2].enumerate_codewords(limit);
    std::vector<RCodeword> out;
    out.reserve(w1.size() * w2.size() * w3.size());
    for (const Word& a : w1) {
      for (const Word& b : w2) {
        for (const Word& c : w3) {
          RCodeword w(n());
          for (std::size_t i = 0; i < n(); ++i) w[i] = Triple{a[i], b[i], c[i]};
          out.push_back(std::move(w));
        }
      }
    }
    return out;
  }

  std::string descriptor() const {
    std::string out = "ring=" + ring_.description() + "\n";
    out += "n=" + std::to_string(n()) + "\n";
    for (std::size_t i = 0; i < 3; ++i) {
      out += "g" + std::to_string(i + 1) + "=" + components_[i].generator().to_string() + "\n";
    }
    return out;
  }

  friend bool operator==(const RCode& a, const RCode& b) noexcept {
    return a.ring_ == b.ring_ && a.components_ == b.components_;
  }

 private:
  RCode(RingSpec ring, std::array<CyclicCode, 3> components)
      : ring_(std::move(ring)), components_(std::move(components)) {}

  RingSpec ring_;
  std::array<CyclicCode, 3> components_;
};

inline RCode RCode::parse_descriptor(std::string_view text) {
  std::optional<std::string> ring_text, n_text;
  std::array<std::optional<std::string>, 3> g_text;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = detail::strip(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(Errc::kParseError, "descriptor line " + std::to_string(line_no) + " has no '='");
    }
    const std::string key(detail::strip(line.substr(0, eq)));
    const std::string value(detail::strip(line.substr(eq + 1)));
    std::optional<std::string>* slot = nullptr;
    if (key == "ring") slot = &ring_text;
    if (key == "n") slot = &n_text;
    if (key == "g1") slot = &g_text[0];
    if (key == "g2") slot = &g_text[1];
    if (key == "g3") slot = &g_text[2];
    if (slot == nullptr) throw Error(Errc::kParseError, "unknown descriptor key '" + key + "'");
    if (slot->has_value()) throw Error(Errc::kParseError, "duplicate descriptor key '" + key + "'");
    *slot = value;
  }
  if (!ring_text || !n_text || !g_text[0] || !g_text[1] || !g_text[2]) {
    throw Error(Errc::kParseError, "descriptor needs ring, n, g1, g2 and g3");
  }
  const RingSpec ring = RingSpec::parse(*ring_text);
  const std::uint64_t n = detail::parse_uint(*n_text, "n");
  if (n == 0 || n > (1u << 16)) throw Error(Errc::kInvalidArgument, "n out of range");
  const Field& f = ring.field();
  return build(ring, CyclicCode::from_generator(Poly::parse(f, *g_text[0]), n),
               CyclicCode::from_generator(Poly::parse(f, *g_text[1]), n),
               CyclicCode::from_generator(Poly::parse(f, *g_text[2]), n));
}

// σ applied coordinate-wise over R.
inline RCodeword shift(const RCodeword& w) { return shift_codeword<Triple>(std::span<const Triple>(w)); }

inline std::vector<RingElement> to_ring_word(std::span<const Triple> w, const RingSpec& ring) {
  std::vector<RingElement> out;
  out.reserve(w.size());
  for (const Triple& t : w) out.push_back(triple_to_ring(t, ring));
  return out;
}

inline RCodeword from_ring_word(std::span<const RingElement> w) {
  RCodeword out;
  out.reserve(w.size());
  for (const RingElement& x : w) out.push_back(ring_to_triple(x));
  return out;
}

// φ(x) = (s(x) | t(x) | u(x)): s in positions 0..n-1, t in n..2n-1, u in 2n..3n-1.
inline Word gray_map(std::span<const Triple> w) {
  const std::size_t n = w.size();
  Word out(3 * n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = w[i].s;
    out[n + i] = w[i].t;
    out[2 * n + i] = w[i].u;
  }
  return out;
}

inline RCodeword gray_preimage(std::span<const FieldElement> image) {
  if (image.size() % 3 != 0) throw Error(Errc::kInvalidArgument, "Gray image length must be a multiple of 3");
  const std::size_t n = image.size() / 3;
  RCodeword out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = Triple{image[i], image[n + i], image[2 * n + i]};
  return out;
}

// Block layout (s|t|u) to the interleaved layout (s1 t1 u1 s2 t2 u2 ...),
// which is the same code up to a coordinate permutation.
inline Word interleave_gray(std::span<const FieldElement> block) {
  if (block.size() % 3 != 0) throw Error(Errc::kInvalidArgument, "Gray image length must be a multiple of 3");
  const std::size_t n = block.size() / 3;
  Word out(block.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t b = 0; b < 3; ++b) out[3 * i + b] = block[b * n + i];
  }
  return out;
}

// φ(C) = C1 ⊗ C2 ⊗ C3 as a description: the three length-n blocks and |φ(C)|.
struct GrayImage {
  std::array<CyclicCode, 3> blocks;
  std::size_t length;
  std::uint64_t cardinality;
};

inline GrayImage gray_map_code(const RCode& code) {
  std::uint64_t card = 1;
  for (const CyclicCode& c : code.components()) card *= c.cardinality();
  RINGCYCLIC_CHECK(card == code.cardinality(), "|φ(C)| = |C1||C2||C3|");
  return GrayImage{code.components(), 3 * code.n(), card};
}

// (e1 g1(x), e2 g2(x), e3 g3(x)).
inline std::array<RingPoly, 3> generators_over_r(const RCode& code) {
  const auto e = code.ring().idempotents();
  return {RingPoly::scaled(e[0], code.component(1).generator()),
          RingPoly::scaled(e[1], code.component(2).generator()),
          RingPoly::scaled(e[2], code.component(3).generator())};
}

// Single generator g(x) = e1 g1 + e2 g2 + e3 g3, assembled coefficient-wise in
// v: v^0 carries g3, v^i for 1 <= i < r carries (g1 - g2)/r, and v^r carries
// g1/r + (r-1) g2/r - g3.
inline RingPoly single_generator(const RCode& code) {
  const RingSpec& ring = code.ring();
  const Field& f = ring.field();
  const std::uint32_t r = ring.r();
  const FieldElement inv_r = f.inv(f.from_int(r));
  const FieldElement r_minus_one_over_r = f.mul(f.from_int(static_cast<std::int64_t>(r) - 1), inv_r);
  const Poly& g1 = code.component(1).generator();
  const Poly& g2 = code.component(2).generator();
  const Poly& g3 = code.component(3).generator();
  const std::size_t len = std::max({g1.coeffs().size(), g2.coeffs().size(), g3.coeffs().size()});
  std::vector<RingElement> coeffs;
  coeffs.reserve(len);
  for (std::size_t j = 0; j < len; ++j) {
    std::vector<FieldElement> v(ring.width(), Field::zero());
    v[0] = g3.coeff(j);
    const FieldElement middle = f.mul(f.sub(g1.coeff(j), g2.coeff(j)), inv_r);
    for (std::uint32_t i = 1; i < r; ++i) v[i] = middle;
    v[r] = f.sub(f.add(f.mul(g1.coeff(j), inv_r), f.mul(g2.coeff(j), r_minus_one_over_r)), g3.coeff(j));
    coeffs.emplace_back(ring, std::move(v));
  }
  RingPoly g(ring, std::move(coeffs));
  RINGCYCLIC_DCHECK(([&] {
                      const auto gens = generators_over_r(code);
                      return g == gens[0] + gens[1] + gens[2];
                    }()),
                    "single generator equals e1 g1 + e2 g2 + e3 g3");
  return g;
}

// e1 h1 + e2 h2 + e3 h3; multiplying the single generator by it gives x^n - 1.
inline RingPoly single_generator_cofactor(const RCode& code) {
  const auto e = code.ring().idempotents();
  return RingPoly::scaled(e[0], code.component(1).check_polynomial()) +
         RingPoly::scaled(e[1], code.component(2).check_polynomial()) +
         RingPoly::scaled(e[2], code.component(3).check_polynomial());
}

inline std::array<QuotientElement, 3> component_idempotents(const RCode& code) {
  return {code.component(1).generating_idempotent(), code.component(2).generating_idempotent(),
          code.component(3).generating_idempotent()};
}

inline RingPoly combine_idempotents(const RingSpec& ring, const std::array<QuotientElement, 3>& f) {
  const auto e = ring.idempotents();
  return RingPoly::scaled(e[0], f[0].poly()) + RingPoly::scaled(e[1], f[1].poly()) +
         RingPoly::scaled(e[2], f[2].poly());
}

// e = e1 f1 + e2 f2 + e3 f3 with f_i the generating idempotent of C_i.
inline RingPoly idempotent_over_r(const RCode& code) {
  RingPoly e = combine_idempotents(code.ring(), component_idempotents(code));
  RINGCYCLIC_DCHECK((e * e).reduced(code.n()) == e, "idempotent over R is idempotent");
  return e;
}

// C^⊥ = e1 C1^⊥ ⊕ e2 C2^⊥ ⊕ e3 C3^⊥.
inline RCode dual(const RCode& code) {
  return RCode::build(code.ring(), dual(code.component(1)), dual(code.component(2)), dual(code.component(3)));
}

// 1 - e1 f1(x^{-1}) - e2 f2(x^{-1}) - e3 f3(x^{-1}) for component idempotents f_i.
inline RingPoly dual_idempotent(const RingSpec& ring, const std::array<QuotientElement, 3>& f) {
  const std::size_t n = f[0].n();
  for (std::size_t i = 0; i < 3; ++i) {
    if (f[i].n() != n || !(f[i].field() == ring.field())) {
      throw Error(Errc::kMixedParameters, "component idempotents disagree on length or field");
    }
    if (!f[i].is_idempotent()) {
      throw Error(Errc::kNotIdempotentComponents, "f" + std::to_string(i + 1) + " = " + f[i].to_string() +
                                                      " is not idempotent");
    }
  }
  const auto e = ring.idempotents();
  RingPoly out = RingPoly::from_field_poly(ring, Poly::constant(ring.field(), Field::one()));
  for (std::size_t i = 0; i < 3; ++i) out = out - RingPoly::scaled(e[i], f[i].eval_at_x_inverse().poly());
  return out.reduced(n);
}

inline RingPoly dual_idempotent(const RCode& code) {
  return dual_idempotent(code.ring(), component_idempotents(code));
}

inline bool is_self_dual(const RCode& code) {
  const bool self_dual = dual(code) == code;
  RINGCYCLIC_DCHECK(self_dual == (dual(code.component(1)) == code.component(1) &&
                                  dual(code.component(2)) == code.component(2) &&
                                  dual(code.component(3)) == code.component(3)),
                    "self-duality is componentwise");
  return self_dual;
}

// Invariance of φ(C) under T(s|t|u) = (σ(s)|σ(t)|σ(u)), checked on the
// enumerated image.
inline bool is_quasi_cyclic_order3(const RCode& code, EnumerationLimit limit = EnumerationLimit{}) {
  const std::size_t n = code.n();
  const std::uint64_t q = code.ring().field().order();
  bool overflow = false;
  detail::checked_pow(q, 3 * n, overflow);
  std::vector<Word> images;
  for (const RCodeword& w : code.enumerate_codewords(limit)) images.push_back(gray_map(w));
  auto shifted = [&](const Word& w) {
    Word out(3 * n);
    for (std::size_t b = 0; b < 3; ++b) {
      for (std::size_t i = 0; i < n; ++i) out[b * n + (i + 1) % n] = w[b * n + i];
    }
    return out;
  };
  if (overflow) {
    std::sort(images.begin(), images.end());
    return std::all_of(images.begin(), images.end(),
                       [&](const Word& w) { return std::binary_search(images.begin(), images.end(), shifted(w)); });
  }
  // Words as base-q integers.
  auto key = [&](const Word& w) {
    std::uint64_t k = 0;
    for (FieldElement c : w) k = k * q + c.raw;
    return k;
  };
  std::vector<std::uint64_t> keys;
  keys.reserve(images.size());
  for (const Word& w : images) keys.push_back(key(w));
  std::sort(keys.begin(), keys.end());
  return std::all_of(images.begin(), images.end(),
                     [&](const Word& w) { return std::binary_search(keys.begin(), keys.end(), key(shifted(w))); });
}

// Σ x_i y_i in R, computed componentwise in triple form.
inline Triple inner_product(const RingSpec& ring, std::span<const Triple> x, std::span<const Triple> y) {
  if (x.size() != y.size()) throw Error(Errc::kInvalidArgument, "inner product of words of different lengths");
  const Field& f = ring.field();
  Triple acc{};
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc.s = f.add(acc.s, f.mul(x[i].s, y[i].s));
    acc.t = f.add(acc.t, f.mul(x[i].t, y[i].t));
    acc.u = f.add(acc.u, f.mul(x[i].u, y[i].u));
  }
  return acc;
}

// Minimum Hamming weight over R (a coordinate counts when its triple is
// nonzero); nullopt for the zero code.
inline std::optional<std::size_t> min_weight(const RCode& code, EnumerationLimit limit = EnumerationLimit{}) {
  if (code.dimension() == 0) return std::nullopt;
  std::size_t best = code.n();
  for (const RCodeword& w : code.enumerate_codewords(limit)) {
    std::size_t weight = 0;
    for (const Triple& t : w) weight += !(t == Triple{});
    if (weight != 0 && weight < best) best = weight;
  }
  return best;
}

// All RCodes of length n over `ring`: every triple of divisors of x^n - 1.
inline std::vector<RCode> all_rcodes(const RingSpec& ring, std::size_t n, EnumerationLimit limit = EnumerationLimit{}) {
  const std::vector<CyclicCode> codes = all_cyclic_codes(ring.field(), n, limit);
  detail::bounded_pow(codes.size(), 3, limit, "R-code enumeration");
  std::vector<RCode> out;
  for (const CyclicCode& a : codes) {
    for (const CyclicCode& b : codes) {
      for (const CyclicCode& c : codes) out.push_back(RCode::build(ring, a, b, c));
    }
  }
  return out;
}

}  // namespace ringcyclic
