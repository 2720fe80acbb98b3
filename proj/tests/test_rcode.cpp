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

#include "ringcyclic/oracle.hpp"
#include "ringcyclic/rcode.hpp"
#include "ringcyclic/ring_poly.hpp"
#include "ringcyclic/verify.hpp"
#include "support.hpp"

namespace ringcyclic {
namespace {

using oracle::Alphabet;
using oracle::CodewordSet;
using oracle::Row;
using testing::kPropertyCases;
using testing::kSeed;
using verify::detail::enumerated_set;
using verify::detail::ring_poly_row;

Poly P(const Field& f, std::string_view text) { return Poly::parse(f, text); }

const RingSpec& r32() {
  static const RingSpec ring(Field(3, 1), 2);
  return ring;
}

RCode make(const RingSpec& ring, std::size_t n, std::string_view g1, std::string_view g2, std::string_view g3) {
  const Field& f = ring.field();
  return RCode::build(ring, CyclicCode::from_generator(P(f, g1), n), CyclicCode::from_generator(P(f, g2), n),
                      CyclicCode::from_generator(P(f, g3), n));
}

RCode example() { return make(r32(), 2, "x+1", "x+2", "1"); }

CodewordSet closure(const Alphabet& a, const RCode& c, const std::vector<RingPoly>& gens) {
  std::vector<Row> rows;
  for (const RingPoly& g : gens) rows.push_back(ring_poly_row(a, g, c.n()));
  return oracle::ideal_closure(a, c.n(), rows);
}

template <typename F>
void expect_error(Errc code, F&& body) {
  try {
    body();
    ADD_FAILURE() << "expected " << errc_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

TEST(RingPoly, ArithmeticAndText) {
  const RingSpec& ring = r32();
  const RingPoly a = RingPoly::parse(ring, "(1+v)*x^2+2*v");
  EXPECT_EQ(a.degree(), 2u);
  EXPECT_EQ(RingPoly::parse(ring, a.to_string()), a);
  EXPECT_EQ(a.reduced(2), RingPoly::parse(ring, "1+v+2*v"));
  EXPECT_EQ((a - a), RingPoly(ring));
  EXPECT_EQ(RingPoly::parse(ring, "v*x") * RingPoly::parse(ring, "v^2*x"), RingPoly::parse(ring, "v*x^2"));
  EXPECT_EQ(RingPoly::parse(ring, "x+v").eval_at_x_inverse(3), RingPoly::parse(ring, "x^2+v"));
  EXPECT_EQ(RingPoly::from_field_poly(ring, P(ring.field(), "x+2")), RingPoly::parse(ring, "x+2"));
}

TEST(RingPolyProperty, RingLaws) {
  std::mt19937_64 rng(kSeed);
  const RingSpec ring(Field(5, 1), 3);
  auto random_poly = [&] {
    std::vector<RingElement> c(1 + rng() % 4, RingElement(ring));
    for (auto& x : c) x = testing::random_ring_element(rng, ring);
    return RingPoly(ring, std::move(c));
  };
  for (int i = 0; i < kPropertyCases; ++i) {
    const RingPoly a = random_poly(), b = random_poly(), c = random_poly();
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(RingPoly::parse(ring, a.to_string()), a);
    ASSERT_EQ((a * b).reduced(3), (a.reduced(3) * b.reduced(3)).reduced(3));
  }
}

TEST(RCode, BuildExamples) {
  const RingSpec& ring = r32();
  EXPECT_EQ(RCode::zero(ring, 2).cardinality(), 1u);
  EXPECT_EQ(RCode::full(ring, 2).cardinality(), 729u);
  EXPECT_EQ(example().cardinality(), 81u);
  EXPECT_EQ(example().enumerate_codewords().size(), 81u);
  EXPECT_EQ(example().dimension(), 4u);
  const RingSpec f4(Field(2, 2), 3);
  const RCode big = make(f4, 3, "x+1", "1", "1");
  EXPECT_EQ(big.cardinality(), std::uint64_t{1} << 16);
  std::uint64_t product = 1;
  for (const CyclicCode& c : big.components()) product *= c.enumerate_codewords().size();
  EXPECT_EQ(product, big.cardinality());
}

TEST(RCode, BuildErrors) {
  const RingSpec& ring = r32();
  const Field& f = ring.field();
  expect_error(Errc::kMixedParameters, [&] {
    RCode::build(ring, CyclicCode::full(f, 2), CyclicCode::full(f, 4), CyclicCode::full(f, 2));
  });
  expect_error(Errc::kMixedParameters, [&] {
    const Field f5(5, 1);
    RCode::build(ring, CyclicCode::full(f5, 2), CyclicCode::full(f5, 2), CyclicCode::full(f5, 2));
  });
}

TEST(RCode, Descriptor) {
  const RCode c = example();
  const std::string text = "ring=R(3;2)\nn=2\ng1=x+1\ng2=x+2\ng3=1\n";
  EXPECT_EQ(c.descriptor(), text);
  EXPECT_EQ(RCode::parse_descriptor(text), c);
  EXPECT_EQ(RCode::parse_descriptor("# comment\n\n g3 = 1\nring=R(3; 2)\nn=2\ng1=1+x\ng2=2+x\n"), c);
  const RCode ext = make(RingSpec(Field(3, 2), 2), 4, "x+a", "x^2+1", "1");
  EXPECT_EQ(RCode::parse_descriptor(ext.descriptor()), ext);
  for (const char* bad : {"ring=R(3;2)\nn=2\ng1=x+1\ng2=x+2\n", "ring=R(3;2)\nn=2\ng1=x+1\ng2=x+2\ng3=1\ng3=1\n",
                          "ring=R(3;2)\nn=2\ng1=x+1\ng2=x+2\ng3=1\ng4=1\n", "ring=R(3;2)\nn=2\ng1\n"}) {
    expect_error(Errc::kParseError, [&] { RCode::parse_descriptor(bad); });
  }
  expect_error(Errc::kNotADivisor, [] { RCode::parse_descriptor("ring=R(3;2)\nn=2\ng1=x\ng2=1\ng3=1\n"); });
  expect_error(Errc::kNotCoprime, [] { RCode::parse_descriptor("ring=R(3;2)\nn=3\ng1=1\ng2=1\ng3=1\n"); });
  expect_error(Errc::kInvalidSpec, [] { RCode::parse_descriptor("ring=R(2;2)\nn=1\ng1=1\ng2=1\ng3=1\n"); });
}

TEST(Gray, Examples) {
  const RingSpec& ring = r32();
  const Field& f = ring.field();
  EXPECT_EQ(gray_map(RCodeword(3)), Word(9, Field::zero()));
  const RCodeword w{Triple{FieldElement{1}, FieldElement{2}, FieldElement{0}}};
  EXPECT_EQ(gray_map(w), (Word{FieldElement{1}, FieldElement{2}, FieldElement{0}}));
  const GrayImage g = gray_map_code(example());
  EXPECT_EQ(g.cardinality, 81u);
  EXPECT_EQ(g.length, 6u);
  EXPECT_EQ(g.blocks[0].generator(), P(f, "x+1"));
  const Word block{FieldElement{1}, FieldElement{2}, FieldElement{0}, FieldElement{1}, FieldElement{2}, FieldElement{0}};
  EXPECT_EQ(interleave_gray(block),
            (Word{FieldElement{1}, FieldElement{0}, FieldElement{2}, FieldElement{2}, FieldElement{1}, FieldElement{0}}));
}

// φ(C) enumerated word by word equals the concatenation product of the
// enumerated components, for every R-code at (3, 2, n).
TEST(Gray, ImageIsConcatenationProduct) {
  const RingSpec& ring = r32();
  const Alphabet fa = Alphabet::field(ring.field());
  for (std::size_t n : {1u, 2u, 4u}) {
    for (const RCode& c : all_rcodes(ring, n)) {
      std::vector<Row> rows;
      for (const RCodeword& w : c.enumerate_codewords()) rows.push_back(verify::detail::field_row(gray_map(w)));
      const CodewordSet image = CodewordSet::from_rows(fa, 3 * n, rows);
      EXPECT_EQ(image.size(), rows.size());
      EXPECT_EQ(image.size(), c.cardinality());
      const CodewordSet expected =
          oracle::concatenation_product(enumerated_set(fa, c.component(1), EnumerationLimit{}),
                                        enumerated_set(fa, c.component(2), EnumerationLimit{}),
                                        enumerated_set(fa, c.component(3), EnumerationLimit{}));
      EXPECT_EQ(image, expected);
    }
  }
}

TEST(GrayProperty, BijectiveAndLinear) {
  std::mt19937_64 rng(kSeed + 1);
  const RingSpec ring(Field(5, 1), 3);
  const Field& f = ring.field();
  for (int i = 0; i < kPropertyCases; ++i) {
    const std::size_t n = 1 + rng() % 6;
    RCodeword x(n), y(n);
    for (auto& t : x) t = testing::random_triple(rng, f);
    for (auto& t : y) t = testing::random_triple(rng, f);
    const FieldElement a = testing::random_element(rng, f);
    RCodeword combo(n);
    for (std::size_t j = 0; j < n; ++j) {
      combo[j] = Triple{f.add(f.mul(a, x[j].s), y[j].s), f.add(f.mul(a, x[j].t), y[j].t),
                        f.add(f.mul(a, x[j].u), y[j].u)};
    }
    const Word gx = gray_map(x), gy = gray_map(y), gc = gray_map(combo);
    for (std::size_t j = 0; j < 3 * n; ++j) ASSERT_EQ(gc[j], f.add(f.mul(a, gx[j]), gy[j]));
    ASSERT_EQ(gray_preimage(gx), x);
    ASSERT_EQ(from_ring_word(to_ring_word(x, ring)), x);
  }
}

TEST(Shift, ClosureOfBuiltCodes) {
  for (const RingSpec& ring : {r32(), RingSpec(Field(5, 1), 3)}) {
    for (std::size_t n : {1u, 2u, 4u}) {
      for (const RCode& c : all_rcodes(ring, n)) {
        if (c.cardinality() > 4000) continue;
        for (const RCodeword& w : c.enumerate_codewords()) ASSERT_TRUE(c.contains(shift(w)));
      }
    }
  }
}

TEST(Generators, Examples) {
  const RingSpec& ring = r32();
  const Alphabet a = Alphabet::subring(ring);
  const auto e = ring.idempotents();
  const auto zero_gens = generators_over_r(RCode::zero(ring, 2));
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(zero_gens[i], RingPoly::scaled(e[i], Poly::x_to_n_minus_one(ring.field(), 2)));
  }
  EXPECT_EQ(closure(a, RCode::zero(ring, 2), {zero_gens.begin(), zero_gens.end()}).size(), 1u);
  const auto full_gens = generators_over_r(RCode::full(ring, 2));
  EXPECT_EQ(closure(a, RCode::full(ring, 2), {full_gens.begin(), full_gens.end()}).size(), 729u);
  const auto g = generators_over_r(example());
  EXPECT_EQ(closure(a, example(), {g.begin(), g.end()}), enumerated_set(a, example(), EnumerationLimit{}));
}

TEST(SingleGenerator, Examples) {
  const RingSpec& ring = r32();
  const Field& f = ring.field();
  const RCode same = make(ring, 4, "x^2+1", "x^2+1", "x^2+1");
  EXPECT_EQ(single_generator(same), RingPoly::from_field_poly(ring, P(f, "x^2+1")));
  EXPECT_EQ(single_generator(RCode::zero(ring, 4)), RingPoly::from_field_poly(ring, Poly::x_to_n_minus_one(f, 4)));
  const auto e = ring.idempotents();
  const RingPoly expected = RingPoly::scaled(e[0], P(f, "x+1")) + RingPoly::scaled(e[1], P(f, "x+2")) +
                            RingPoly::scaled(e[2], P(f, "1"));
  EXPECT_EQ(single_generator(example()), expected);
  const Alphabet a = Alphabet::subring(ring);
  EXPECT_EQ(closure(a, example(), {single_generator(example())}), enumerated_set(a, example(), EnumerationLimit{}));
}

// Builds the generator with the v^r coefficient (r-1)/r g1 + 1/r g2 - g3, as
// opposed to 1/r g1 + (r-1)/r g2 - g3. The two coincide exactly when r = 2.
RingPoly swapped_vr_generator(const RCode& code) {
  const RingSpec& ring = code.ring();
  const Field& f = ring.field();
  const std::uint32_t r = ring.r();
  const FieldElement inv_r = f.inv(f.from_int(r));
  const FieldElement rm1 = f.mul(f.from_int(r - 1), inv_r);
  const Poly& g1 = code.component(1).generator();
  const Poly& g2 = code.component(2).generator();
  const Poly& g3 = code.component(3).generator();
  std::vector<RingElement> coeffs;
  for (std::size_t j = 0; j <= code.n(); ++j) {
    std::vector<FieldElement> v(ring.width(), Field::zero());
    v[0] = g3.coeff(j);
    for (std::uint32_t i = 1; i < r; ++i) v[i] = f.mul(f.sub(g1.coeff(j), g2.coeff(j)), inv_r);
    v[r] = f.sub(f.add(f.mul(g1.coeff(j), rm1), f.mul(g2.coeff(j), inv_r)), g3.coeff(j));
    coeffs.emplace_back(ring, std::move(v));
  }
  return RingPoly(ring, std::move(coeffs));
}

TEST(SingleGenerator, SwappedVrCoefficientAgreesOnlyAtRTwo) {
  const RCode at_two = example();
  EXPECT_EQ(swapped_vr_generator(at_two), single_generator(at_two));
  const RingSpec ring(Field(5, 1), 3);
  const RCode at_three = make(ring, 2, "x+1", "x+4", "1");
  EXPECT_NE(swapped_vr_generator(at_three), single_generator(at_three));
  const Alphabet a = Alphabet::subring(ring);
  const CodewordSet truth = enumerated_set(a, at_three, EnumerationLimit{});
  EXPECT_EQ(closure(a, at_three, {single_generator(at_three)}), truth);
  EXPECT_NE(closure(a, at_three, {swapped_vr_generator(at_three)}), truth);
}

TEST(SingleGenerator, DividesXnMinusOne) {
  for (const RingSpec& ring : {r32(), RingSpec(Field(5, 1), 3), RingSpec(Field(2, 2), 3)}) {
    for (std::size_t n : {1u, 3u}) {
      if (n % ring.field().p() == 0) continue;
      for (const RCode& c : all_rcodes(ring, n)) {
        EXPECT_EQ(single_generator(c) * single_generator_cofactor(c),
                  RingPoly::from_field_poly(ring, Poly::x_to_n_minus_one(ring.field(), n)));
      }
    }
  }
}

TEST(IdempotentOverR, Examples) {
  const RingSpec& ring = r32();
  EXPECT_TRUE(idempotent_over_r(RCode::zero(ring, 2)).is_zero());
  EXPECT_EQ(idempotent_over_r(RCode::full(ring, 2)), RingPoly::parse(ring, "1"));
  const auto f = component_idempotents(example());
  EXPECT_EQ(f[0], QuotientElement(P(ring.field(), "2+2*x"), 2));
  EXPECT_EQ(f[2], QuotientElement::one(ring.field(), 2));
  const Alphabet a = Alphabet::subring(ring);
  const RingPoly e = idempotent_over_r(example());
  const CodewordSet s = enumerated_set(a, example(), EnumerationLimit{});
  EXPECT_TRUE(oracle::is_unity(s, ring_poly_row(a, e, 2)));
  EXPECT_EQ(closure(a, example(), {e}), s);
}

TEST(DualR, Examples) {
  const RingSpec& ring = r32();
  EXPECT_EQ(dual(RCode::full(ring, 2)), RCode::zero(ring, 2));
  EXPECT_EQ(dual(RCode::zero(ring, 2)), RCode::full(ring, 2));
  const RCode d = dual(example());
  EXPECT_EQ(d.cardinality(), 9u);
  EXPECT_EQ(d.component(1), dual(example().component(1)));
  EXPECT_TRUE(d.component(3).is_zero_code());
  const Alphabet a = Alphabet::subring(ring);
  EXPECT_EQ(enumerated_set(a, d, EnumerationLimit{}),
            oracle::exhaustive_dual(enumerated_set(a, example(), EnumerationLimit{})));
}

TEST(DualR, InnerProductIsComponentwise) {
  std::mt19937_64 rng(kSeed + 2);
  const RingSpec ring(Field(5, 1), 3);
  for (int i = 0; i < kPropertyCases; ++i) {
    const std::size_t n = 1 + rng() % 5;
    RCodeword x(n), y(n);
    for (auto& t : x) t = testing::random_triple(rng, ring.field());
    for (auto& t : y) t = testing::random_triple(rng, ring.field());
    RingElement acc(ring);
    const auto rx = to_ring_word(x, ring), ry = to_ring_word(y, ring);
    for (std::size_t j = 0; j < n; ++j) acc = acc + rx[j] * ry[j];
    ASSERT_EQ(triple_to_ring(inner_product(ring, x, y), ring), acc);
  }
}

TEST(DualIdempotent, Examples) {
  const RingSpec& ring = r32();
  EXPECT_TRUE(dual_idempotent(RCode::full(ring, 2)).is_zero());
  EXPECT_EQ(dual_idempotent(RCode::zero(ring, 2)), RingPoly::parse(ring, "1"));
  for (const RCode& c : all_rcodes(ring, 2)) EXPECT_EQ(dual_idempotent(c), idempotent_over_r(dual(c)));
  const Field& f = ring.field();
  const std::array<QuotientElement, 3> bad{QuotientElement(P(f, "x"), 2), QuotientElement::one(f, 2),
                                           QuotientElement::one(f, 2)};
  expect_error(Errc::kNotIdempotentComponents, [&] { dual_idempotent(ring, bad); });
  const std::array<QuotientElement, 3> mixed{QuotientElement::one(f, 2), QuotientElement::one(f, 4),
                                             QuotientElement::one(f, 2)};
  expect_error(Errc::kMixedParameters, [&] { dual_idempotent(ring, mixed); });
}

TEST(SelfDual, Examples) {
  const RingSpec& ring = r32();
  EXPECT_FALSE(is_self_dual(RCode::zero(ring, 2)));
  EXPECT_FALSE(is_self_dual(RCode::full(ring, 2)));
  for (std::size_t n : {2u, 4u}) {
    for (const RCode& c : all_rcodes(ring, n)) {
      if (2 * c.component(1).dimension() != n) {
        EXPECT_FALSE(is_self_dual(c));
      }
    }
  }
}

TEST(QuasiCyclic, Examples) {
  const RingSpec& ring = r32();
  EXPECT_TRUE(is_quasi_cyclic_order3(RCode::zero(ring, 2)));
  EXPECT_TRUE(is_quasi_cyclic_order3(RCode::full(ring, 2)));
  for (const RCode& c : all_rcodes(ring, 2)) EXPECT_TRUE(is_quasi_cyclic_order3(c));
  expect_error(Errc::kLimitExceeded, [&] { is_quasi_cyclic_order3(RCode::full(ring, 4), EnumerationLimit{1000}); });
}

TEST(MinWeight, Examples) {
  const RingSpec& ring = r32();
  EXPECT_FALSE(min_weight(RCode::zero(ring, 2)).has_value());
  EXPECT_EQ(min_weight(RCode::full(ring, 4)), 1u);
  EXPECT_EQ(min_weight(make(ring, 2, "x+1", "x+1", "x+1")), 2u);
  EXPECT_EQ(min_weight(example()), 1u);
}

}  // namespace
}  // namespace ringcyclic
