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

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ringcyclic/errors.hpp"
#include "ringcyclic/gf.hpp"
#include "ringcyclic/limits.hpp"
#include "ringcyclic/poly.hpp"

namespace ringcyclic {

using Word = std::vector<FieldElement>;

enum class GeneratorCheck {
  // Reject generators that do not divide x^n - 1.
  kStrict,
  // Replace the generator by gcd(g, x^n - 1).
  kPermissive,
};

// Cyclic code of length n over F_{p^k}, gcd(n, p) = 1, stored as its monic
// generator g | x^n - 1 and check polynomial h = (x^n - 1)/g. Two codes are
// equal iff their generators are.
class CyclicCode {
 public:
  static CyclicCode from_generator(const Poly& g, std::size_t n, GeneratorCheck check = GeneratorCheck::kStrict) {
    const Field& field = g.field();
    require_coprime_length(field, n);
    if (g.is_zero()) throw Error(Errc::kZeroPolynomial, "generator must be nonzero");
    const Poly xn1 = Poly::x_to_n_minus_one(field, n);
    Poly gen = check == GeneratorCheck::kStrict ? g.monic() : gcd(g, xn1);
    if (check == GeneratorCheck::kStrict && !divides(gen, xn1)) {
      throw Error(Errc::kNotADivisor,
                  g.to_string() + " does not divide x^" + std::to_string(n) + "-1 over " + field.description());
    }
    Poly h = divide_exact(xn1, gen);
    return CyclicCode(std::move(gen), std::move(h), n);
  }

  static CyclicCode full(const Field& field, std::size_t n) {
    return from_generator(Poly::constant(field, Field::one()), n);
  }

  static CyclicCode zero(const Field& field, std::size_t n) {
    return from_generator(Poly::x_to_n_minus_one(field, n), n);
  }

  // The code generated by an idempotent e, i.e. by gcd(e, x^n - 1).
  static CyclicCode from_idempotent(const QuotientElement& e) {
    if (!e.is_idempotent()) throw Error(Errc::kNotIdempotent, e.to_string() + " is not idempotent");
    const Poly xn1 = Poly::x_to_n_minus_one(e.field(), e.n());
    return from_generator(gcd(e.poly(), xn1), e.n(), GeneratorCheck::kPermissive);
  }

  const Field& field() const noexcept { return g_.field(); }
  std::size_t n() const noexcept { return n_; }
  const Poly& generator() const noexcept { return g_; }
  const Poly& check_polynomial() const noexcept { return h_; }
  std::size_t dimension() const noexcept { return n_ - *g_.degree(); }
  bool is_zero_code() const noexcept { return dimension() == 0; }
  bool is_full_code() const noexcept { return *g_.degree() == 0; }

  // (p^k)^{dim}; throws kLimitExceeded when it does not fit in 64 bits.
  std::uint64_t cardinality() const {
    bool overflow = false;
    const std::uint64_t c = detail::checked_pow(field().order(), dimension(), overflow);
    if (overflow) throw Error(Errc::kLimitExceeded, "code cardinality overflows 64 bits");
    return c;
  }

  // The unique idempotent generator: s*g mod x^n - 1 where s*g + t*h = 1.
  QuotientElement generating_idempotent() const {
    const ExtGcd eg = ext_gcd(g_, h_);
    RINGCYCLIC_CHECK(*eg.d.degree() == 0, "gcd(g, h) = 1 requires squarefree x^n - 1");
    QuotientElement e(eg.s * g_, n_);
    RINGCYCLIC_CHECK(e.is_idempotent(), "generating idempotent is idempotent");
    RINGCYCLIC_CHECK(e * QuotientElement(g_, n_) == QuotientElement(g_, n_), "idempotent is a unity on g");
    RINGCYCLIC_DCHECK(gcd(e.poly(), Poly::x_to_n_minus_one(field(), n_)) == g_, "gcd(e, x^n - 1) = g");
    return e;
  }

  bool contains(std::span<const FieldElement> word) const {
    if (word.size() != n_) return false;
    return divides(g_, Poly(field(), Word(word.begin(), word.end())));
  }

  // Every codeword a(x) g(x) with deg a < dim, lexicographic in the
  // coefficients (a_0, a_1, ...) of a.
  std::vector<Word> enumerate_codewords(EnumerationLimit limit = EnumerationLimit{}) const {
    const std::uint64_t count = detail::bounded_pow(field().order(), dimension(), limit, "codeword enumeration");
    const std::vector<FieldElement> elements = field().enumerate();
    const std::size_t dim = dimension();
    std::vector<Word> out;
    out.reserve(count);
    std::vector<std::size_t> digits(dim, 0);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<FieldElement> a(dim);
      for (std::size_t i = 0; i < dim; ++i) a[i] = elements[digits[i]];
      const Poly c = Poly(field(), std::move(a)) * g_;
      Word w(n_, Field::zero());
      for (std::size_t i = 0; i < c.coeffs().size(); ++i) w[i] = c.coeffs()[i];
      out.push_back(std::move(w));
      for (std::size_t i = dim; i-- > 0;) {
        if (++digits[i] < elements.size()) break;
        digits[i] = 0;
      }
    }
    RINGCYCLIC_CHECK(out.size() == count, "codeword count matches cardinality");
    return out;
  }

  // Minimum Hamming weight of a nonzero codeword; nullopt for the zero code.
  std::optional<std::size_t> min_weight(EnumerationLimit limit = EnumerationLimit{}) const {
    if (is_zero_code()) return std::nullopt;
    std::size_t best = n_;
    for (const Word& w : enumerate_codewords(limit)) {
      std::size_t weight = 0;
      for (FieldElement c : w) weight += c != Field::zero();
      if (weight != 0 && weight < best) best = weight;
    }
    return best;
  }

  // "CyclicCode{field=GF(3), n=4, g=x^2+1}".
  std::string descriptor() const {
    return "CyclicCode{field=" + field().description() + ", n=" + std::to_string(n_) + ", g=" + g_.to_string() + "}";
  }

  friend bool operator==(const CyclicCode& a, const CyclicCode& b) noexcept {
    return a.n_ == b.n_ && a.g_ == b.g_;
  }

 private:
  CyclicCode(Poly g, Poly h, std::size_t n) : g_(std::move(g)), h_(std::move(h)), n_(n) {}

  friend CyclicCode dual(const CyclicCode& code);

  Poly g_;
  Poly h_;
  std::size_t n_;
};

// σ(c) = (c_{n-1}, c_0, ..., c_{n-2}).
template <typename T>
std::vector<T> shift_codeword(std::span<const T> c) {
  std::vector<T> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[(i + 1) % c.size()] = c[i];
  return out;
}

inline Word shift_codeword(const Word& c) { return shift_codeword<FieldElement>(std::span<const FieldElement>(c)); }

inline void require_same_parameters(std::span<const CyclicCode> codes) {
  if (codes.empty()) throw Error(Errc::kInvalidArgument, "at least one code is required");
  for (const CyclicCode& c : codes) {
    if (c.n() != codes[0].n() || !(c.field() == codes[0].field())) {
      throw Error(Errc::kMixedParameters, c.descriptor() + " vs " + codes[0].descriptor());
    }
  }
}

inline QuotientElement product_idempotent(std::span<const QuotientElement> idempotents) {
  if (idempotents.empty()) throw Error(Errc::kInvalidArgument, "empty idempotent list");
  QuotientElement acc = idempotents[0];
  for (std::size_t i = 1; i < idempotents.size(); ++i) acc = acc * idempotents[i];
  return acc;
}

inline constexpr std::size_t kMaxInclusionExclusionTerms = 12;

// Σ e_i - Σ e_i e_j + ... + (-1)^{t-1} Π e_i over all nonempty subsets when
// t <= 12; beyond that the equivalent recurrence e <- e + e_t - e e_t.
inline QuotientElement inclusion_exclusion_idempotent(std::span<const QuotientElement> idempotents) {
  if (idempotents.empty()) throw Error(Errc::kInvalidArgument, "empty idempotent list");
  const std::size_t t = idempotents.size();
  if (t > kMaxInclusionExclusionTerms) {
    QuotientElement acc = idempotents[0];
    for (std::size_t i = 1; i < t; ++i) acc = acc + idempotents[i] - acc * idempotents[i];
    return acc;
  }
  QuotientElement acc = QuotientElement::zero(idempotents[0].field(), idempotents[0].n());
  for (std::uint32_t mask = 1; mask < (1u << t); ++mask) {
    QuotientElement term = QuotientElement::one(idempotents[0].field(), idempotents[0].n());
    int bits = 0;
    for (std::size_t i = 0; i < t; ++i) {
      if (mask & (1u << i)) {
        term = term * idempotents[i];
        ++bits;
      }
    }
    acc = bits % 2 == 1 ? acc + term : acc - term;
  }
  return acc;
}

// ∩ C_i, generated by lcm(g_i); its idempotent is Π e_i.
inline CyclicCode intersect(std::span<const CyclicCode> codes) {
  require_same_parameters(codes);
  std::vector<Poly> gens;
  for (const CyclicCode& c : codes) gens.push_back(c.generator());
  CyclicCode out = CyclicCode::from_generator(lcm(gens), codes[0].n());
#if RINGCYCLIC_DCHECKS_ENABLED
  std::vector<QuotientElement> es;
  for (const CyclicCode& c : codes) es.push_back(c.generating_idempotent());
  RINGCYCLIC_DCHECK(product_idempotent(es) == out.generating_idempotent(), "intersection idempotent is the product");
#endif
  return out;
}

// Σ C_i, generated by gcd(g_i); its idempotent is the inclusion-exclusion sum.
inline CyclicCode sum(std::span<const CyclicCode> codes) {
  require_same_parameters(codes);
  std::vector<Poly> gens;
  for (const CyclicCode& c : codes) gens.push_back(c.generator());
  CyclicCode out = CyclicCode::from_generator(gcd(gens), codes[0].n());
#if RINGCYCLIC_DCHECKS_ENABLED
  std::vector<QuotientElement> es;
  for (const CyclicCode& c : codes) es.push_back(c.generating_idempotent());
  RINGCYCLIC_DCHECK(inclusion_exclusion_idempotent(es) == out.generating_idempotent(),
                    "sum idempotent is the inclusion-exclusion sum");
#endif
  return out;
}

inline CyclicCode intersect(std::initializer_list<CyclicCode> codes) {
  return intersect(std::span<const CyclicCode>(codes.begin(), codes.size()));
}
inline CyclicCode sum(std::initializer_list<CyclicCode> codes) {
  return sum(std::span<const CyclicCode>(codes.begin(), codes.size()));
}

// C^⊥ is generated by the reciprocal of h; its idempotent is 1 - e(x^{-1}).
inline CyclicCode dual(const CyclicCode& code) {
  const Poly xn1 = Poly::x_to_n_minus_one(code.field(), code.n());
  Poly g = reciprocal(code.check_polynomial());
  Poly h = divide_exact(xn1, g);
  CyclicCode out(std::move(g), std::move(h), code.n());
  RINGCYCLIC_DCHECK(out.dimension() + code.dimension() == code.n(), "dim C + dim C^⊥ = n");
#if RINGCYCLIC_DCHECKS_ENABLED
  if (!detail::fault_active(detail::Fault::kReciprocalSkipsMonic)) {
    const QuotientElement one = QuotientElement::one(code.field(), code.n());
    RINGCYCLIC_DCHECK(out.generating_idempotent() == one - code.generating_idempotent().eval_at_x_inverse(),
                      "dual idempotent is 1 - e(x^{-1})");
  }
#endif
  return out;
}

// dim(Σ C_i) equals the alternating sum of the dimensions of all
// intersections over nonempty subsets.
inline bool dim_inclusion_exclusion_check(std::span<const CyclicCode> codes,
                                          std::size_t max_codes = kMaxInclusionExclusionTerms) {
  require_same_parameters(codes);
  if (codes.size() > max_codes) throw Error(Errc::kLimitExceeded, "too many codes for inclusion-exclusion");
  std::int64_t alternating = 0;
  for (std::uint32_t mask = 1; mask < (1u << codes.size()); ++mask) {
    std::vector<CyclicCode> subset;
    for (std::size_t i = 0; i < codes.size(); ++i) {
      if (mask & (1u << i)) subset.push_back(codes[i]);
    }
    const auto dim = static_cast<std::int64_t>(intersect(subset).dimension());
    alternating += subset.size() % 2 == 1 ? dim : -dim;
  }
  return static_cast<std::int64_t>(sum(codes).dimension()) == alternating;
}

inline std::vector<CyclicCode> all_cyclic_codes(const Field& field, std::size_t n,
                                                EnumerationLimit limit = EnumerationLimit{}) {
  std::vector<CyclicCode> out;
  for (const Poly& g : divisors_of_xn_minus_1(field, n, limit)) out.push_back(CyclicCode::from_generator(g, n));
  return out;
}

}  // namespace ringcyclic
