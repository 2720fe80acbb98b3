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


#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ringcyclic/poly.hpp"
#include "support.hpp"

namespace ringcyclic {
namespace {

using testing::kPropertyCases;
using testing::kSeed;

Poly P(const Field& f, std::string_view text) { return Poly::parse(f, text); }

template <typename F>
void expect_error(Errc code, F&& body) {
  try {
    body();
    ADD_FAILURE() << "expected " << errc_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

// Number of q-cyclotomic cosets modulo n, an independent count of the
// irreducible factors of x^n - 1 over F_q.
std::size_t cyclotomic_coset_count(std::uint64_t q, std::uint64_t n) {
  std::vector<bool> seen(n, false);
  std::size_t count = 0;
  for (std::uint64_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    for (std::uint64_t j = s; !seen[j]; j = (j * q) % n) seen[j] = true;
  }
  return count;
}

// True when no monic polynomial of degree 1..deg/2 divides f, by trial
// multiplication against every monic cofactor.
bool brute_force_irreducible(const Poly& f) {
  const Field& field = f.field();
  const std::size_t deg = *f.degree();
  auto monics = [&](std::size_t d) {
    std::vector<Poly> out;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= field.order();
    for (std::uint64_t m = 0; m < count; ++m) {
      std::vector<FieldElement> c(d + 1);
      std::uint64_t x = m;
      for (std::size_t i = 0; i < d; ++i) {
        c[i] = FieldElement{static_cast<std::uint32_t>(x % field.order())};
        x /= field.order();
      }
      c[d] = Field::one();
      out.emplace_back(field, std::move(c));
    }
    return out;
  };
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    for (const Poly& a : monics(d)) {
      for (const Poly& b : monics(deg - d)) {
        if (a * b == f.monic()) return false;
      }
    }
  }
  return true;
}

TEST(Poly, CanonicalForm) {
  const Field f(3, 1);
  const Poly zero(f, {Field::zero(), Field::zero()});
  EXPECT_TRUE(zero.is_zero());
  EXPECT_FALSE(zero.degree().has_value());
  EXPECT_EQ(Poly(f, {FieldElement{1}, FieldElement{2}, Field::zero()}).degree(), 1u);
  EXPECT_EQ(P(f, "1 + 2*x^3 + x").to_string(), "2*x^3+x+1");
  EXPECT_EQ(P(f, "2x+1"), P(f, "2*x + 1"));
  EXPECT_EQ(Poly(f).to_string(), "0");
}

TEST(Poly, ArithmeticExamples) {
  const Field f(3, 1);
  EXPECT_EQ(P(f, "x+1") * P(f, "x+2"), P(f, "x^2+2"));
  const DivMod qr = divmod(P(f, "x^2-1"), P(f, "x-1"));
  EXPECT_EQ(qr.quotient, P(f, "x+1"));
  EXPECT_TRUE(qr.remainder.is_zero());
  EXPECT_TRUE((P(f, "x^2+x+2") * Poly(f)).is_zero());
  expect_error(Errc::kDivisionByZero, [&] { divmod(P(f, "x"), Poly(f)); });
}

TEST(Poly, GcdLcmExamples) {
  const Field f(3, 1);
  EXPECT_EQ(gcd(P(f, "x-1"), P(f, "x+1")), P(f, "1"));
  EXPECT_EQ(lcm(P(f, "x-1"), P(f, "x+1")), P(f, "x^2-1"));
  const Poly g = P(f, "2*x^2+x+1");
  EXPECT_EQ(gcd(g, g), g.monic());
  expect_error(Errc::kBothZero, [&] { gcd(Poly(f), Poly(f)); });
  const std::vector<Poly> many{P(f, "x^4-1"), P(f, "x^2-1"), P(f, "x+1")};
  EXPECT_EQ(gcd(std::span<const Poly>(many)), P(f, "x+1"));
  EXPECT_EQ(lcm(std::span<const Poly>(many)), P(f, "x^4-1"));
}

TEST(Poly, ExtendedGcdExamples) {
  const Field f(3, 1);
  const ExtGcd r = ext_gcd(P(f, "x-1"), P(f, "x+1"));
  EXPECT_EQ(r.d, P(f, "1"));
  EXPECT_EQ(r.s * P(f, "x-1") + r.t * P(f, "x+1"), r.d);
  const Poly g = P(f, "2*x+2");
  const ExtGcd z = ext_gcd(g, Poly(f));
  EXPECT_EQ(z.d, g.monic());
  EXPECT_EQ(z.s, P(f, "2"));
  EXPECT_TRUE(z.t.is_zero());
}

TEST(PolyProperty, BezoutOnRandomPairs) {
  std::mt19937_64 rng(kSeed);
  for (const Field& f : {Field(2, 1), Field(3, 1), Field(5, 1), Field(2, 2), Field(3, 2)}) {
    for (int i = 0; i < kPropertyCases; ++i) {
      const Poly a = testing::random_poly(rng, f, 6);
      const Poly b = testing::random_poly(rng, f, 6);
      if (a.is_zero() && b.is_zero()) continue;
      const ExtGcd r = ext_gcd(a, b);
      ASSERT_EQ(r.s * a + r.t * b, r.d);
      ASSERT_TRUE(r.d.is_monic());
      ASSERT_TRUE(divides(r.d, a) && divides(r.d, b));
      if (!a.is_zero() && !b.is_zero()) {
        ASSERT_EQ(lcm(a, b) * r.d, (a * b).monic());
      }
    }
  }
}

TEST(PolyProperty, DivmodIdentity) {
  std::mt19937_64 rng(kSeed + 1);
  const Field f(5, 1);
  for (int i = 0; i < kPropertyCases; ++i) {
    const Poly a = testing::random_poly(rng, f, 8);
    Poly b = testing::random_poly(rng, f, 4);
    if (b.is_zero()) b = P(f, "x+1");
    const DivMod qr = divmod(a, b);
    ASSERT_EQ(qr.quotient * b + qr.remainder, a);
    ASSERT_TRUE(qr.remainder.is_zero() || *qr.remainder.degree() < *b.degree());
  }
}

TEST(Factor, Examples) {
  const Field f3(3, 1);
  EXPECT_EQ(factor_xn_minus_1(f3, 2), (std::vector<Poly>{P(f3, "x+1"), P(f3, "x+2")}));
  EXPECT_EQ(factor_xn_minus_1(f3, 4), (std::vector<Poly>{P(f3, "x+1"), P(f3, "x+2"), P(f3, "x^2+1")}));
  for (const Field& f : {Field(2, 1), Field(5, 1), Field(3, 2)}) {
    EXPECT_EQ(factor_xn_minus_1(f, 1), (std::vector<Poly>{P(f, "x-1")}));
  }
  expect_error(Errc::kNotCoprime, [&] { factor_xn_minus_1(f3, 3); });
  expect_error(Errc::kInvalidArgument, [&] { factor_xn_minus_1(f3, 0); });
}

TEST(Factor, ProductIrreducibleAndCosetCount) {
  for (const Field& f : {Field(2, 1), Field(3, 1), Field(5, 1), Field(7, 1), Field(2, 2), Field(3, 2)}) {
    for (std::size_t n = 1; n <= 15; ++n) {
      if (n % f.p() == 0) continue;
      const auto factors = factor_xn_minus_1(f, n);
      Poly prod = P(f, "1");
      for (const Poly& g : factors) {
        EXPECT_TRUE(g.is_monic());
        prod = prod * g;
      }
      EXPECT_EQ(prod, Poly::x_to_n_minus_one(f, n)) << f.description() << " n=" << n;
      EXPECT_EQ(factors.size(), cyclotomic_coset_count(f.order(), n)) << f.description() << " n=" << n;
      EXPECT_TRUE(std::is_sorted(factors.begin(), factors.end(), poly_less));
      if (n <= 8) {
        for (const Poly& g : factors) EXPECT_TRUE(brute_force_irreducible(g)) << g.to_string();
      }
    }
  }
}

TEST(Divisors, Examples) {
  const Field f3(3, 1);
  EXPECT_EQ(divisors_of_xn_minus_1(f3, 2),
            (std::vector<Poly>{P(f3, "1"), P(f3, "x+1"), P(f3, "x+2"), P(f3, "x^2-1")}));
  EXPECT_EQ(divisors_of_xn_minus_1(f3, 1), (std::vector<Poly>{P(f3, "1"), P(f3, "x-1")}));
  const auto d4 = divisors_of_xn_minus_1(f3, 4);
  EXPECT_EQ(d4.size(), 8u);
  for (const Poly& g : d4) EXPECT_TRUE(divides(g, Poly::x_to_n_minus_one(f3, 4)));
  expect_error(Errc::kLimitExceeded, [&] { divisors_of_xn_minus_1(f3, 4, EnumerationLimit{4}); });
}

TEST(Reciprocal, Examples) {
  const Field f3(3, 1);
  EXPECT_EQ(reciprocal(P(f3, "x+2")), P(f3, "x+2"));
  EXPECT_EQ(reciprocal(P(f3, "x^2+x+2")), P(f3, "x^2+2*x+2"));
  for (std::size_t d = 0; d < 5; ++d) EXPECT_EQ(reciprocal(Poly::monomial(f3, Field::one(), d)), P(f3, "1"));
  expect_error(Errc::kZeroPolynomial, [&] { reciprocal(Poly(f3)); });
}

TEST(ReciprocalProperty, Involution) {
  std::mt19937_64 rng(kSeed + 2);
  for (const Field& f : {Field(3, 1), Field(5, 1), Field(2, 2)}) {
    for (int i = 0; i < kPropertyCases; ++i) {
      const Poly h = testing::random_poly(rng, f, 7);
      if (h.is_zero() || h.coeff(0) == Field::zero()) continue;
      ASSERT_EQ(reciprocal(reciprocal(h)), h.monic());
      // Roots of h* are the inverses of the roots of h.
      for (FieldElement a : f.enumerate()) {
        if (a == Field::zero()) continue;
        ASSERT_EQ(h.evaluate(a) == Field::zero(), reciprocal(h).evaluate(f.inv(a)) == Field::zero());
      }
    }
  }
}

TEST(Quotient, ReductionAndInverseSubstitution) {
  const Field f3(3, 1);
  const QuotientElement one = QuotientElement::one(f3, 5);
  EXPECT_EQ(one.eval_at_x_inverse(), one);
  EXPECT_EQ(QuotientElement(P(f3, "x"), 3).eval_at_x_inverse(), QuotientElement(P(f3, "x^2"), 3));
  EXPECT_EQ(QuotientElement(P(f3, "1+2*x+x^3"), 4).eval_at_x_inverse(), QuotientElement(P(f3, "1+x+2*x^3"), 4));
  EXPECT_EQ(QuotientElement(P(f3, "x^5+x^2"), 3).poly(), P(f3, "2*x^2"));
  EXPECT_EQ(QuotientElement(P(f3, "x+1"), 3).coefficients(),
            (std::vector<FieldElement>{FieldElement{1}, FieldElement{1}, Field::zero()}));
}

TEST(QuotientProperty, InverseSubstitutionIsInvolutiveAndMultiplicative) {
  std::mt19937_64 rng(kSeed + 3);
  const Field f(5, 1);
  for (int i = 0; i < kPropertyCases; ++i) {
    const std::size_t n = 1 + rng() % 9;
    const QuotientElement a(testing::random_poly(rng, f, 10), n);
    const QuotientElement b(testing::random_poly(rng, f, 10), n);
    ASSERT_EQ(a.eval_at_x_inverse().eval_at_x_inverse(), a);
    ASSERT_EQ((a * b).eval_at_x_inverse(), a.eval_at_x_inverse() * b.eval_at_x_inverse());
    const auto c = a.coefficients();
    const auto ci = a.eval_at_x_inverse().coefficients();
    for (std::size_t j = 0; j < n; ++j) ASSERT_EQ(ci[(n - j) % n], c[j]);
  }
}

}  // namespace
}  // namespace ringcyclic
