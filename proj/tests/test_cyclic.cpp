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

#include "ringcyclic/cyclic.hpp"
#include "ringcyclic/oracle.hpp"
#include "support.hpp"

namespace ringcyclic {
namespace {

using oracle::Alphabet;
using oracle::CodewordSet;
using oracle::Row;
using testing::kSeed;

Poly P(const Field& f, std::string_view text) { return Poly::parse(f, text); }

CyclicCode code(const Field& f, std::string_view g, std::size_t n) { return CyclicCode::from_generator(P(f, g), n); }

Row to_row(std::span<const FieldElement> w) {
  Row r;
  for (FieldElement c : w) r.push_back(c.raw);
  return r;
}

CodewordSet words_of(const CyclicCode& c) {
  std::vector<Row> rows;
  for (const Word& w : c.enumerate_codewords()) rows.push_back(to_row(w));
  return CodewordSet::from_rows(Alphabet::field(c.field()), c.n(), rows);
}

CodewordSet closure_of(const CyclicCode& c) {
  const Alphabet a = Alphabet::field(c.field());
  return oracle::ideal_closure(a, c.n(), {to_row(QuotientElement(c.generator(), c.n()).coefficients())});
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

struct Point {
  std::uint32_t p, k;
  std::size_t n;
};

std::vector<Point> small_points() {
  return {{2, 1, 1}, {2, 1, 3}, {2, 1, 5}, {2, 1, 7}, {3, 1, 1}, {3, 1, 2}, {3, 1, 4}, {3, 1, 5},
          {5, 1, 2}, {5, 1, 4}, {2, 2, 3}, {3, 2, 2}, {7, 1, 3}};
}

TEST(CyclicCode, Construction) {
  const Field f(3, 1);
  const CyclicCode full = CyclicCode::from_generator(P(f, "1"), 4);
  EXPECT_EQ(full.dimension(), 4u);
  EXPECT_TRUE(full.is_full_code());
  const CyclicCode zero = CyclicCode::from_generator(P(f, "x^4-1"), 4);
  EXPECT_EQ(zero.dimension(), 0u);
  EXPECT_EQ(zero.cardinality(), 1u);
  const CyclicCode c = code(f, "x+1", 2);
  EXPECT_EQ(c.dimension(), 1u);
  EXPECT_EQ(c.cardinality(), 3u);
  EXPECT_EQ(CyclicCode::from_generator(P(f, "2*x+2"), 2), c);
  EXPECT_EQ(code(f, "x^2+1", 4).descriptor(), "CyclicCode{field=GF(3), n=4, g=x^2+1}");
}

TEST(CyclicCode, ConstructionErrors) {
  const Field f(3, 1);
  expect_error(Errc::kNotCoprime, [&] { code(f, "x+1", 3); });
  expect_error(Errc::kNotADivisor, [&] { code(f, "x^2+x+2", 4); });
  expect_error(Errc::kZeroPolynomial, [&] { CyclicCode::from_generator(Poly(f), 2); });
  EXPECT_EQ(CyclicCode::from_generator(P(f, "x^2+2*x+1"), 2, GeneratorCheck::kPermissive), code(f, "x+1", 2));
}

TEST(CyclicCode, EnumerationExamples) {
  const Field f(3, 1);
  EXPECT_EQ(code(f, "x^2-1", 2).enumerate_codewords(), (std::vector<Word>{Word{Field::zero(), Field::zero()}}));
  const auto words = code(f, "x+1", 2).enumerate_codewords();
  const std::set<Word> got(words.begin(), words.end());
  const std::set<Word> expected{{FieldElement{0}, FieldElement{0}},
                                {FieldElement{1}, FieldElement{1}},
                                {FieldElement{2}, FieldElement{2}}};
  EXPECT_EQ(got, expected);
  expect_error(Errc::kLimitExceeded, [&] { CyclicCode::full(f, 5).enumerate_codewords(EnumerationLimit{100}); });
}

TEST(CyclicCode, EnumerationMatchesClosure) {
  for (const Point& pt : small_points()) {
    const Field f(pt.p, pt.k);
    for (const CyclicCode& c : all_cyclic_codes(f, pt.n)) {
      const auto words = c.enumerate_codewords();
      EXPECT_EQ(words.size(), c.cardinality());
      EXPECT_EQ(std::set<Word>(words.begin(), words.end()).size(), words.size());
      const CodewordSet s = words_of(c);
      EXPECT_EQ(s, closure_of(c)) << c.descriptor();
      EXPECT_TRUE(oracle::is_shift_closed(s));
      for (const Word& w : words) EXPECT_TRUE(c.contains(w));
    }
  }
}

TEST(CyclicCode, ShiftAndWeight) {
  const Field f(3, 1);
  EXPECT_EQ(shift_codeword(Word{FieldElement{1}, FieldElement{0}, FieldElement{0}}),
            (Word{FieldElement{0}, FieldElement{1}, FieldElement{0}}));
  EXPECT_EQ(CyclicCode::full(f, 4).min_weight(), 1u);
  EXPECT_EQ(code(f, "x+1", 2).min_weight(), 2u);
  EXPECT_FALSE(CyclicCode::zero(f, 2).min_weight().has_value());
}

TEST(Idempotent, Examples) {
  const Field f(3, 1);
  EXPECT_TRUE(CyclicCode::zero(f, 4).generating_idempotent().is_zero());
  EXPECT_EQ(CyclicCode::full(f, 4).generating_idempotent(), QuotientElement::one(f, 4));
  EXPECT_EQ(code(f, "x+1", 2).generating_idempotent(), QuotientElement(P(f, "2+2*x"), 2));
  EXPECT_EQ(CyclicCode::from_idempotent(QuotientElement(P(f, "2+2*x"), 2)), code(f, "x+1", 2));
  EXPECT_EQ(CyclicCode::from_idempotent(QuotientElement::zero(f, 2)), CyclicCode::zero(f, 2));
  EXPECT_EQ(CyclicCode::from_idempotent(QuotientElement::one(f, 2)), CyclicCode::full(f, 2));
  expect_error(Errc::kNotIdempotent, [&] { CyclicCode::from_idempotent(QuotientElement(P(f, "x"), 2)); });
}

// The census over F^n finds exactly one unity per code, and it is the
// constructive generating idempotent.
TEST(Idempotent, UniqueUnityAgainstCensus) {
  for (const Point& pt : small_points()) {
    const Field f(pt.p, pt.k);
    const Alphabet a = Alphabet::field(f);
    const CodewordSet census = oracle::idempotent_census(a, pt.n);
    const auto codes = all_cyclic_codes(f, pt.n);
    EXPECT_EQ(census.size(), std::size_t{1} << factor_xn_minus_1(f, pt.n).size());
    EXPECT_EQ(census.size(), codes.size());
    for (const CyclicCode& c : codes) {
      const auto unities = oracle::unities_in(words_of(c), census);
      ASSERT_EQ(unities.size(), 1u) << c.descriptor();
      EXPECT_EQ(unities[0], to_row(c.generating_idempotent().coefficients()));
    }
  }
}

TEST(IntersectSum, Examples) {
  const Field f(3, 1);
  const CyclicCode a = code(f, "x+1", 2), b = code(f, "x+2", 2);
  const CyclicCode full = CyclicCode::full(f, 2), zero = CyclicCode::zero(f, 2);
  EXPECT_EQ(intersect({a, full}), a);
  EXPECT_EQ(intersect({a, a}), a);
  EXPECT_EQ(intersect({a, b}), zero);
  EXPECT_EQ(sum({a, zero}), a);
  EXPECT_EQ(sum({a, b}), full);
  expect_error(Errc::kMixedParameters, [&] { intersect({a, CyclicCode::full(f, 4)}); });
  expect_error(Errc::kMixedParameters, [&] { sum({a, CyclicCode::full(Field(5, 1), 2)}); });
}

TEST(IntersectSum, AgreeWithSetOperations) {
  for (const Point& pt : small_points()) {
    const Field f(pt.p, pt.k);
    const auto codes = all_cyclic_codes(f, pt.n);
    std::vector<CodewordSet> sets;
    for (const CyclicCode& c : codes) sets.push_back(words_of(c));
    for (std::size_t i = 0; i < codes.size(); ++i) {
      for (std::size_t j = i; j < codes.size(); ++j) {
        const CyclicCode meet = intersect({codes[i], codes[j]});
        const CyclicCode join = sum({codes[i], codes[j]});
        EXPECT_EQ(words_of(meet), oracle::set_intersection(sets[i], sets[j]));
        EXPECT_EQ(words_of(join), oracle::set_sum(sets[i], sets[j]));
        const std::array<QuotientElement, 2> e{codes[i].generating_idempotent(), codes[j].generating_idempotent()};
        const CodewordSet meet_set = words_of(meet), join_set = words_of(join);
        EXPECT_TRUE(oracle::is_unity(meet_set, to_row(product_idempotent(e).coefficients())));
        EXPECT_TRUE(oracle::is_unity(join_set, to_row(inclusion_exclusion_idempotent(e).coefficients())));
      }
    }
  }
}

TEST(IntersectSum, RandomTriplesAtLengthFour) {
  const Field f(3, 1);
  const auto codes = all_cyclic_codes(f, 4);
  std::mt19937_64 rng(kSeed);
  for (int trial = 0; trial < 50; ++trial) {
    const std::vector<CyclicCode> t{codes[rng() % codes.size()], codes[rng() % codes.size()],
                                    codes[rng() % codes.size()]};
    const CyclicCode join = sum(t);
    std::vector<QuotientElement> e;
    for (const CyclicCode& c : t) e.push_back(c.generating_idempotent());
    const QuotientElement ie = inclusion_exclusion_idempotent(e);
    EXPECT_TRUE(ie.is_idempotent());
    EXPECT_TRUE(oracle::is_unity(words_of(join), to_row(ie.coefficients())));
    EXPECT_EQ(ie, join.generating_idempotent());
    EXPECT_EQ(product_idempotent(e), intersect(t).generating_idempotent());
    EXPECT_TRUE(dim_inclusion_exclusion_check(t));
    EXPECT_EQ(words_of(join),
              oracle::set_sum(oracle::set_sum(words_of(t[0]), words_of(t[1])), words_of(t[2])));
  }
}

TEST(DimInclusionExclusion, Examples) {
  const Field f(3, 1);
  const std::vector<CyclicCode> one{code(f, "x+1", 2)};
  EXPECT_TRUE(dim_inclusion_exclusion_check(one));
  const std::vector<CyclicCode> two{code(f, "x+1", 2), code(f, "x+2", 2)};
  EXPECT_TRUE(dim_inclusion_exclusion_check(two));
  EXPECT_EQ(sum(two).dimension(), 2u);
}

TEST(Dual, Examples) {
  const Field f(3, 1);
  EXPECT_EQ(dual(CyclicCode::full(f, 4)), CyclicCode::zero(f, 4));
  EXPECT_EQ(dual(CyclicCode::zero(f, 4)), CyclicCode::full(f, 4));
  const CyclicCode c = code(f, "x+1", 2);
  EXPECT_EQ(c.check_polynomial(), P(f, "x+2"));
  EXPECT_EQ(dual(c).generator(), P(f, "x+2"));
  const Word x{FieldElement{1}, FieldElement{1}}, y{FieldElement{1}, FieldElement{2}};
  EXPECT_EQ(f.add(f.mul(x[0], y[0]), f.mul(x[1], y[1])), Field::zero());
}

TEST(Dual, AgreesWithExhaustiveDual) {
  for (const Point& pt : small_points()) {
    const Field f(pt.p, pt.k);
    const CodewordSet census = oracle::idempotent_census(Alphabet::field(f), pt.n);
    for (const CyclicCode& c : all_cyclic_codes(f, pt.n)) {
      const CyclicCode d = dual(c);
      const CodewordSet exhaustive = oracle::exhaustive_dual(words_of(c));
      EXPECT_EQ(words_of(d), exhaustive) << c.descriptor();
      EXPECT_EQ(d.generator(), reciprocal(c.check_polynomial()));
      EXPECT_EQ(c.dimension() + d.dimension(), pt.n);
      EXPECT_EQ(dual(d), c);
      const QuotientElement expected = QuotientElement::one(f, pt.n) - c.generating_idempotent().eval_at_x_inverse();
      EXPECT_EQ(d.generating_idempotent(), expected);
      const auto unities = oracle::unities_in(exhaustive, census);
      ASSERT_EQ(unities.size(), 1u);
      EXPECT_EQ(unities[0], to_row(expected.coefficients()));
    }
  }
}

TEST(AllCyclicCodes, CountAndOrder) {
  const Field f(3, 1);
  const auto codes = all_cyclic_codes(f, 4);
  EXPECT_EQ(codes.size(), 8u);
  EXPECT_EQ(all_cyclic_codes(f, 5).size(), 4u);
  const auto submodules = oracle::all_cyclic_submodules(Alphabet::field(f), 4);
  std::set<std::vector<oracle::Symbol>> a, b;
  for (const auto& s : submodules) a.emplace(s.flat().begin(), s.flat().end());
  for (const CyclicCode& c : codes) {
    const CodewordSet s = words_of(c);
    b.emplace(s.flat().begin(), s.flat().end());
  }
  EXPECT_EQ(a, b);
}

}  // namespace
}  // namespace ringcyclic
