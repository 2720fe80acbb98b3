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


// Runs every structural claim about cyclic codes over F and over R against
// the brute-force oracle on a parameter grid.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ringcyclic/cyclic.hpp"
#include "ringcyclic/errors.hpp"
#include "ringcyclic/gf.hpp"
#include "ringcyclic/limits.hpp"
#include "ringcyclic/oracle.hpp"
#include "ringcyclic/poly.hpp"
#include "ringcyclic/rcode.hpp"
#include "ringcyclic/ring_poly.hpp"
#include "ringcyclic/ring_r.hpp"

namespace ringcyclic::verify {

struct Grid {
  std::vector<std::uint32_t> p, k, r, n;

  static Grid default_grid() { return Grid{{2, 3, 5}, {1, 2}, {2, 3}, {1, 2, 4}}; }

  // "p=2,3,5;k=1,2;r=2,3;n=1,2,4". An empty or all-blank string is the empty
  // grid. Omitted keys take their default values.
  static Grid parse(std::string_view text) {
    if (detail::strip(text).empty()) return Grid{};
    Grid g = default_grid();
    std::vector<bool> seen(4, false);
    while (!text.empty()) {
      const auto semi = text.find(';');
      const std::string_view part = detail::strip(text.substr(0, semi));
      text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
      if (part.empty()) continue;
      const auto eq = part.find('=');
      if (eq == std::string_view::npos) throw Error(Errc::kParseError, "grid entry '" + std::string(part) + "' has no '='");
      const std::string_view key = detail::strip(part.substr(0, eq));
      std::vector<std::uint32_t>* slot = nullptr;
      std::size_t index = 0;
      const std::array<std::pair<std::string_view, std::vector<std::uint32_t>*>, 4> keys{
          {{"p", &g.p}, {"k", &g.k}, {"r", &g.r}, {"n", &g.n}}};
      for (std::size_t i = 0; i < keys.size(); ++i) {
        if (key == keys[i].first) {
          slot = keys[i].second;
          index = i;
        }
      }
      if (slot == nullptr) throw Error(Errc::kParseError, "unknown grid key '" + std::string(key) + "'");
      if (seen[index]) throw Error(Errc::kParseError, "duplicate grid key '" + std::string(key) + "'");
      seen[index] = true;
      slot->clear();
      std::string_view values = part.substr(eq + 1);
      while (!values.empty()) {
        const auto comma = values.find(',');
        const std::string_view v = detail::strip(values.substr(0, comma));
        values = comma == std::string_view::npos ? std::string_view{} : values.substr(comma + 1);
        if (v.empty()) continue;
        const std::uint64_t x = detail::parse_uint(v, key);
        if (x == 0 || x > 4096) throw Error(Errc::kParseError, "grid value out of range: " + std::string(v));
        slot->push_back(static_cast<std::uint32_t>(x));
      }
    }
    for (std::uint32_t p : g.p) {
      if (!is_prime(p)) throw Error(Errc::kParseError, "grid p=" + std::to_string(p) + " is not prime");
    }
    return g;
  }
};

struct Options {
  Grid grid = Grid::default_grid();
  std::uint64_t seed = 20260101;
  EnumerationLimit limit{};
  unsigned workers = 1;
  // Codewords a single R-level check may enumerate across all its codes.
  std::uint64_t enumeration_budget = std::uint64_t{1} << 23;
  // Words an exhaustive-dual check may scan across all its codes.
  std::uint64_t scan_budget = std::uint64_t{1} << 30;
};

struct CheckResult {
  std::string id;
  std::string params;
  std::size_t cases = 0;
  std::size_t skipped = 0;
  bool failed = false;
  std::string counterexample;

  // Work counter for checks that cap their total effort; 0 means uncapped.
  std::uint64_t budget = 0;
  std::uint64_t spent = 0;

  bool ran() const noexcept { return cases > 0 || failed; }

  // Charges `work` units; once the budget is gone the case is skipped.
  void spend(std::uint64_t work) {
    if (budget != 0 && (work > budget || spent > budget - work)) {
      throw Error(Errc::kLimitExceeded, "work budget exhausted");
    }
    spent += work;
  }
  bool passed() const noexcept { return !failed; }

  // Records the first failure only.
  void fail(std::string what) {
    if (!failed) counterexample = std::move(what);
    failed = true;
  }

  std::string full_params() const {
    std::string out = params + ",cases=" + std::to_string(cases);
    if (skipped != 0) out += ",skipped=" + std::to_string(skipped);
    return out;
  }
};

struct Report {
  std::vector<CheckResult> results;
  std::size_t invalid_points = 0;

  std::size_t checks() const {
    return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const auto& r) { return r.ran(); }));
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const auto& r) { return r.failed; }));
  }
  bool all_passed() const { return failures() == 0; }

  // One line per executed check; checks with nothing in range appear as
  // comments, followed by a summary comment.
  std::string to_text() const {
    std::string out;
    std::size_t skipped = 0;
    for (const CheckResult& r : results) {
      if (!r.ran()) {
        ++skipped;
        out += "# THEOREM " + r.id + " " + r.params + " SKIPPED limit\n";
        continue;
      }
      out += "THEOREM " + r.id + " " + r.full_params() + (r.failed ? " FAIL " + r.counterexample : " PASS") + "\n";
    }
    out += "# checks=" + std::to_string(checks()) + " failed=" + std::to_string(failures()) +
           " skipped=" + std::to_string(skipped) + " invalid_points=" + std::to_string(invalid_points) + "\n";
    return out;
  }
};

namespace detail {

using oracle::Alphabet;
using oracle::CodewordSet;
using oracle::Row;

inline Row field_row(std::span<const FieldElement> w) {
  Row out;
  out.reserve(w.size());
  for (FieldElement c : w) out.push_back(c.raw);
  return out;
}

inline Row poly_row(const Poly& g, std::size_t n) { return field_row(QuotientElement(g, n).coefficients()); }

inline Row ring_poly_row(const Alphabet& a, const RingPoly& g, std::size_t n) {
  Row out;
  for (const RingElement& x : g.to_word(n)) out.push_back(a.symbol_of(x));
  return out;
}

inline Row triple_row(const Alphabet& a, std::span<const Triple> w) {
  Row out;
  out.reserve(w.size());
  for (const Triple& t : w) out.push_back(a.symbol_of(t));
  return out;
}

inline CodewordSet enumerated_set(const Alphabet& a, const CyclicCode& c, EnumerationLimit limit) {
  std::vector<Row> rows;
  for (const Word& w : c.enumerate_codewords(limit)) rows.push_back(field_row(w));
  return CodewordSet::from_rows(a, c.n(), std::move(rows), limit);
}

// The words e1 c1 + e2 c2 + e3 c3 assembled from the component
// enumerations; RCode::enumerate_codewords itself is compared against the
// oracle in check_gray_cardinality.
inline CodewordSet enumerated_set(const Alphabet& a, const RCode& c, EnumerationLimit limit) {
  ringcyclic::detail::bounded_pow(c.ring().field().order(), c.dimension(), limit, "R-code enumeration");
  const std::size_t n = c.n();
  std::array<std::vector<Word>, 3> parts;
  for (std::size_t i = 0; i < 3; ++i) parts[i] = c.components()[i].enumerate_codewords(limit);
  std::vector<oracle::Symbol> flat;
  flat.reserve(parts[0].size() * parts[1].size() * parts[2].size() * n);
  for (const Word& x : parts[0]) {
    for (const Word& y : parts[1]) {
      for (const Word& z : parts[2]) {
        for (std::size_t j = 0; j < n; ++j) flat.push_back(a.symbol_of(Triple{x[j], y[j], z[j]}));
      }
    }
  }
  return CodewordSet::from_flat(a, n, std::move(flat), limit);
}

inline std::string field_params(const Field& f, std::size_t n) {
  return "p=" + std::to_string(f.p()) + ",k=" + std::to_string(f.k()) + ",n=" + std::to_string(n);
}

inline std::string ring_params(const RingSpec& ring, std::size_t n) {
  return "p=" + std::to_string(ring.field().p()) + ",k=" + std::to_string(ring.field().k()) +
         ",r=" + std::to_string(ring.r()) + ",n=" + std::to_string(n);
}

inline std::string code_text(const RCode& c) {
  std::string d = c.descriptor();
  std::replace(d.begin(), d.end(), '\n', ' ');
  if (!d.empty() && d.back() == ' ') d.pop_back();
  return "{" + d + "}";
}

// Runs `body` once; a limit hit counts as one skipped case.
inline void guarded(CheckResult& r, const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    if (e.code() == Errc::kLimitExceeded) {
      ++r.skipped;
    } else {
      r.fail(std::string("error=") + e.what());
    }
  }
}

inline void require_budget(std::uint64_t work, bool overflow, std::uint64_t budget, std::string_view what) {
  if (overflow || work > budget) {
    throw Error(Errc::kLimitExceeded, std::string(what) + " exceeds the work budget");
  }
}

// Shared per-(field, n) state: every cyclic code with its oracle closure.
struct CyclicPoint {
  Field field;
  std::size_t n;
  Alphabet alphabet;
  std::vector<CyclicCode> codes;
  std::vector<std::optional<CodewordSet>> closures;
  std::optional<CodewordSet> census;

  CyclicPoint(Field f, std::size_t len, EnumerationLimit limit)
      : field(std::move(f)), n(len), alphabet(Alphabet::field(field)), codes(all_cyclic_codes(field, n, limit)) {
    for (const CyclicCode& c : codes) {
      try {
        closures.emplace_back(oracle::ideal_closure(alphabet, n, {poly_row(c.generator(), n)}, limit));
      } catch (const Error& e) {
        if (e.code() != Errc::kLimitExceeded) throw;
        closures.emplace_back(std::nullopt);
      }
    }
    try {
      census = oracle::idempotent_census(alphabet, n, limit);
    } catch (const Error& e) {
      if (e.code() != Errc::kLimitExceeded) throw;
    }
  }

  const CodewordSet& closure(std::size_t i) const {
    if (!closures[i]) throw Error(Errc::kLimitExceeded, "oracle closure over the limit");
    return *closures[i];
  }
};

inline const CodewordSet& require_census(const CyclicPoint& pt) {
  if (!pt.census) throw Error(Errc::kLimitExceeded, "idempotent census over the limit");
  return *pt.census;
}

inline void check_enumeration(const CyclicPoint& pt, CheckResult& r, EnumerationLimit limit) {
  for (std::size_t i = 0; i < pt.codes.size(); ++i) {
    guarded(r, [&] {
      const CyclicCode& c = pt.codes[i];
      const CodewordSet& o = pt.closure(i);
      const auto words = c.enumerate_codewords(limit);
      const CodewordSet e = enumerated_set(pt.alphabet, c, limit);
      ++r.cases;
      if (words.size() != c.cardinality() || e.size() != words.size()) {
        r.fail("code=" + c.descriptor() + " count=" + std::to_string(words.size()));
      } else if (auto w = oracle::symmetric_difference_witness(e, o)) {
        r.fail("code=" + c.descriptor() + " word=" + e.row_to_string(*w));
      } else if (!oracle::is_shift_closed(e)) {
        r.fail("code=" + c.descriptor() + " not shift-closed");
      }
    });
  }
}

inline void check_idempotent_uniqueness(const CyclicPoint& pt, CheckResult& r) {
  guarded(r, [&] {
    const CodewordSet& census = require_census(pt);
    const std::size_t m = factor_xn_minus_1(pt.field, pt.n).size();
    if (census.size() != (std::size_t{1} << m)) {
      r.fail("census=" + std::to_string(census.size()) + " expected=" + std::to_string(std::size_t{1} << m));
    }
    for (std::size_t i = 0; i < pt.codes.size(); ++i) {
      guarded(r, [&] {
        const CyclicCode& c = pt.codes[i];
        const auto unities = oracle::unities_in(pt.closure(i), census);
        const Row expected = field_row(c.generating_idempotent().coefficients());
        ++r.cases;
        if (unities.size() != 1) {
          r.fail("code=" + c.descriptor() + " unities=" + std::to_string(unities.size()));
        } else if (unities[0] != expected) {
          r.fail("code=" + c.descriptor() + " oracle=" + census.row_to_string(unities[0]) +
                 " constructed=" + census.row_to_string(expected));
        }
      });
    }
  });
}

// All pairs i <= j plus `random_triples` seeded triples of code indices.
inline std::vector<std::vector<std::size_t>> index_tuples(std::size_t count, std::uint64_t seed,
                                                          std::size_t random_triples) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i; j < count; ++j) out.push_back({i, j});
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, count - 1);
  for (std::size_t t = 0; t < random_triples && count > 0; ++t) out.push_back({pick(rng), pick(rng), pick(rng)});
  return out;
}

inline std::string tuple_text(const CyclicPoint& pt, const std::vector<std::size_t>& idx) {
  std::string out = "codes=[";
  for (std::size_t i = 0; i < idx.size(); ++i) out += (i ? ";" : "") + pt.codes[idx[i]].generator().to_string();
  return out + "]";
}

inline void check_intersection(const CyclicPoint& pt, CheckResult& r, std::uint64_t seed, EnumerationLimit limit) {
  for (const auto& idx : index_tuples(pt.codes.size(), seed, 20)) {
    guarded(r, [&] {
      std::vector<CyclicCode> codes;
      std::vector<QuotientElement> idems;
      std::optional<CodewordSet> expected;
      std::uint64_t smallest = ~std::uint64_t{0};
      for (std::size_t i : idx) smallest = std::min<std::uint64_t>(smallest, pt.codes[i].cardinality());
      r.spend(smallest);
      for (std::size_t i : idx) {
        codes.push_back(pt.codes[i]);
        idems.push_back(pt.codes[i].generating_idempotent());
        expected = expected ? oracle::set_intersection(*expected, pt.closure(i)) : pt.closure(i);
      }
      const CodewordSet got = enumerated_set(pt.alphabet, intersect(codes), limit);
      const Row unity = field_row(product_idempotent(idems).coefficients());
      ++r.cases;
      if (auto w = oracle::symmetric_difference_witness(got, *expected)) {
        r.fail(tuple_text(pt, idx) + " word=" + got.row_to_string(*w));
      } else if (!expected->contains(unity) || !oracle::is_unity(*expected, unity)) {
        r.fail(tuple_text(pt, idx) + " product idempotent " + expected->row_to_string(unity) + " is not a unity");
      }
    });
  }
}

// Pairwise sums by brute force when small, else the span of both sets.
inline CodewordSet oracle_sum(const CodewordSet& a, const CodewordSet& b, EnumerationLimit limit) {
  constexpr std::uint64_t kBruteForcePairs = std::uint64_t{1} << 22;
  if (static_cast<std::uint64_t>(a.size()) * b.size() <= kBruteForcePairs) return oracle::set_sum(a, b, limit);
  return oracle::subspace_sum(a, b, limit);
}

inline void check_sum(const CyclicPoint& pt, CheckResult& r, std::uint64_t seed, EnumerationLimit limit) {
  for (const auto& idx : index_tuples(pt.codes.size(), seed, 20)) {
    guarded(r, [&] {
      std::vector<CyclicCode> codes;
      std::vector<QuotientElement> idems;
      std::optional<CodewordSet> expected;
      bool overflow = false;
      const std::uint64_t space = ringcyclic::detail::checked_pow(pt.field.order(), pt.n, overflow);
      std::uint64_t bound = 1;
      for (std::size_t i : idx) bound = std::min(space, bound * pt.codes[i].cardinality());
      r.spend(bound);
      for (std::size_t i : idx) {
        codes.push_back(pt.codes[i]);
        idems.push_back(pt.codes[i].generating_idempotent());
        expected = expected ? oracle_sum(*expected, pt.closure(i), limit) : pt.closure(i);
      }
      const CodewordSet got = enumerated_set(pt.alphabet, sum(codes), limit);
      const Row unity = field_row(inclusion_exclusion_idempotent(idems).coefficients());
      ++r.cases;
      if (auto w = oracle::symmetric_difference_witness(got, *expected)) {
        r.fail(tuple_text(pt, idx) + " word=" + got.row_to_string(*w));
      } else if (!expected->contains(unity) || !oracle::is_unity(*expected, unity)) {
        r.fail(tuple_text(pt, idx) + " inclusion-exclusion idempotent " + expected->row_to_string(unity) +
               " is not a unity");
      }
    });
  }
}

inline std::string coeffs_text(const Field& f, const std::optional<std::vector<FieldElement>>& c, std::size_t n) {
  if (!c) return Poly::x_to_n_minus_one(f, n).to_string();
  return Poly(f, *c).to_string();
}

// Fills `r` (dual code, generator and idempotent) and `dim` (dimension
// relations) from one exhaustive scan per code.
inline void check_dual(const CyclicPoint& pt, CheckResult& r, CheckResult& dim, const Options& opt) {
  bool overflow = false;
  const std::uint64_t space = ringcyclic::detail::checked_pow(pt.field.order(), pt.n, overflow);
  require_budget(space * pt.codes.size(), overflow, opt.scan_budget, "exhaustive dual");
  for (std::size_t i = 0; i < pt.codes.size(); ++i) {
    guarded(r, [&] {
      const CyclicCode& c = pt.codes[i];
      const CodewordSet d = oracle::exhaustive_dual(pt.closure(i), opt.limit, opt.workers);
      const CyclicCode cd = dual(c);
      const CodewordSet got = enumerated_set(pt.alphabet, cd, opt.limit);
      const auto oracle_gen = oracle::canonical_generator(d);
      const Poly expected_gen = oracle_gen ? Poly(pt.field, *oracle_gen) : Poly::x_to_n_minus_one(pt.field, pt.n);
      const QuotientElement one = QuotientElement::one(pt.field, pt.n);
      const Row predicted = field_row((one - c.generating_idempotent().eval_at_x_inverse()).coefficients());
      const CodewordSet& census = require_census(pt);
      const auto unities = oracle::unities_in(d, census);
      ++r.cases;
      if (auto w = oracle::symmetric_difference_witness(got, d)) {
        r.fail("code=" + c.descriptor() + " word=" + d.row_to_string(*w));
      } else if (!(cd.generator() == expected_gen)) {
        r.fail("code=" + c.descriptor() + " dual generator=" + cd.generator().to_string() +
               " oracle=" + expected_gen.to_string());
      } else if (unities.size() != 1 || unities[0] != predicted) {
        r.fail("code=" + c.descriptor() + " dual idempotent=" + census.row_to_string(predicted));
      }

      ++dim.cases;
      const std::uint64_t product = static_cast<std::uint64_t>(pt.closure(i).size()) * d.size();
      if (c.dimension() + cd.dimension() != pt.n) {
        dim.fail("code=" + c.descriptor() + " dim+dual dim=" + std::to_string(c.dimension() + cd.dimension()));
      } else if (product != space) {
        dim.fail("code=" + c.descriptor() + " |C||C_perp|=" + std::to_string(product));
      }
    });
  }
  dim.skipped = r.skipped;
}

inline void check_dual_involution(const CyclicPoint& pt, CheckResult& r) {
  for (const CyclicCode& c : pt.codes) {
    guarded(r, [&] {
      const CyclicCode dd = dual(dual(c));
      ++r.cases;
      if (!(dd == c)) r.fail("code=" + c.descriptor() + " dual(dual)=" + dd.descriptor());
    });
  }
}

// Shared per-(ring, n) state.
struct RingPoint {
  RingSpec ring;
  std::size_t n;
  const CyclicPoint& base;
  Alphabet alphabet;
  std::vector<std::array<std::size_t, 3>> triples;

  RingPoint(RingSpec spec, const CyclicPoint& pt, EnumerationLimit limit)
      : ring(std::move(spec)), n(pt.n), base(pt), alphabet(Alphabet::subring(ring, limit)) {
    const std::size_t m = pt.codes.size();
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        for (std::size_t c = 0; c < m; ++c) triples.push_back({a, b, c});
      }
    }
  }

  // Σ over all triples of |C| = (Σ_i |C_i|)^3.
  std::uint64_t enumeration_work() const {
    std::uint64_t total = 0;
    for (const CyclicCode& c : base.codes) total += c.cardinality();
    bool overflow = false;
    const std::uint64_t work = ringcyclic::detail::checked_pow(total, 3, overflow);
    return overflow ? ~std::uint64_t{0} : work;
  }

  RCode code(const std::array<std::size_t, 3>& t) const {
    return RCode::build(ring, base.codes[t[0]], base.codes[t[1]], base.codes[t[2]]);
  }
};

inline void check_gray_cardinality(const RingPoint& pt, CheckResult& r, EnumerationLimit limit,
                                std::uint64_t budget) {
  require_budget(pt.enumeration_work(), false, budget, "R-code enumeration");
  for (const auto& t : pt.triples) {
    guarded(r, [&] {
      const RCode c = pt.code(t);
      const auto words = c.enumerate_codewords(limit);
      std::uint64_t product = 1;
      for (std::size_t i = 0; i < 3; ++i) product *= pt.base.closure(t[i]).size();
      std::vector<Row> image;
      image.reserve(words.size());
      for (const RCodeword& w : words) image.push_back(field_row(gray_map(w)));
      const CodewordSet got = CodewordSet::from_rows(pt.base.alphabet, 3 * pt.n, std::move(image), limit);
      const CodewordSet expected = oracle::concatenation_product(pt.base.closure(t[0]), pt.base.closure(t[1]),
                                                                 pt.base.closure(t[2]), limit);
      ++r.cases;
      if (words.size() != product || c.cardinality() != product || gray_map_code(c).cardinality != product) {
        r.fail("code=" + code_text(c) + " |C|=" + std::to_string(words.size()) + " product=" + std::to_string(product));
      } else if (got.size() != words.size()) {
        r.fail("code=" + code_text(c) + " Gray map is not injective");
      } else if (auto w = oracle::symmetric_difference_witness(got, expected)) {
        r.fail("code=" + code_text(c) + " image word=" + got.row_to_string(*w));
      }
    });
  }
}

// φ(c x + y) = c φ(x) + φ(y) on seeded random words of R^n, with the
// combination computed on v-coefficients.
inline void check_gray_linear(const RingPoint& pt, CheckResult& r, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  const Field& f = pt.ring.field();
  std::uniform_int_distribution<std::uint32_t> sym(0, pt.alphabet.size() - 1);
  std::uniform_int_distribution<std::uint32_t> scalar(0, f.order() - 1);
  const auto e = pt.ring.idempotents();
  auto random_word = [&] {
    std::vector<RingElement> w;
    for (std::size_t i = 0; i < pt.n; ++i) {
      const std::uint32_t s = sym(rng);
      RingElement x(pt.ring);
      std::uint32_t rest = s;
      for (std::size_t j = 0; j < 3; ++j, rest /= f.order()) x = x + e[j].scaled(FieldElement{rest % f.order()});
      w.push_back(std::move(x));
    }
    return w;
  };
  for (int sample = 0; sample < 50; ++sample) {
    guarded(r, [&] {
      const auto x = random_word();
      const auto y = random_word();
      const FieldElement c{scalar(rng)};
      std::vector<RingElement> z;
      for (std::size_t i = 0; i < pt.n; ++i) z.push_back(x[i].scaled(c) + y[i]);
      const Word gx = gray_map(from_ring_word(x));
      const Word gy = gray_map(from_ring_word(y));
      const Word gz = gray_map(from_ring_word(z));
      ++r.cases;
      for (std::size_t i = 0; i < gz.size(); ++i) {
        if (!(gz[i] == f.add(f.mul(c, gx[i]), gy[i]))) {
          r.fail("c=" + f.to_string(c) + " position=" + std::to_string(i));
          return;
        }
      }
      if (!(to_ring_word(from_ring_word(x), pt.ring) == x)) r.fail("Gray round trip changed a word");
    });
  }
}

inline void check_shift_closure(const RingPoint& pt, CheckResult& r, EnumerationLimit limit,
                                std::uint64_t budget) {
  require_budget(pt.enumeration_work(), false, budget, "R-code enumeration");
  for (const auto& t : pt.triples) {
    guarded(r, [&] {
      const RCode c = pt.code(t);
      const CodewordSet s = enumerated_set(pt.alphabet, c, limit);
      ++r.cases;
      for (std::size_t i = 0; i < s.size(); ++i) {
        const Row shifted = oracle::shift_row(s.row(i));
        if (!s.contains(shifted)) {
          r.fail("code=" + code_text(c) + " word=" + s.row_to_string(s.row(i)));
          return;
        }
      }
    });
  }
}

inline constexpr std::uint64_t kSubmoduleSearchLimit = std::uint64_t{1} << 14;

inline void check_submodule_converse(const RingPoint& pt, CheckResult& r, EnumerationLimit limit) {
  guarded(r, [&] {
    ringcyclic::detail::bounded_pow(pt.alphabet.size(), pt.n, EnumerationLimit{kSubmoduleSearchLimit},
                                    "submodule search");
    const auto subs = oracle::all_cyclic_submodules(pt.alphabet, pt.n, limit);
    if (subs.size() != pt.triples.size()) {
      r.fail("submodules=" + std::to_string(subs.size()) + " expected=" + std::to_string(pt.triples.size()));
    }
    for (const CodewordSet& s : subs) {
      ++r.cases;
      std::array<std::optional<CyclicCode>, 3> comps;
      for (std::size_t i = 0; i < 3; ++i) {
        const CodewordSet proj = oracle::component_projection(s, i);
        if (!(oracle::ideal_closure(proj, limit) == proj)) {
          r.fail("submodule word=" + s.row_to_string(s.row(s.size() - 1)) + " projection " + std::to_string(i + 1) +
                 " is not cyclic");
          return;
        }
        const auto g = oracle::canonical_generator(proj);
        comps[i] = CyclicCode::from_generator(g ? Poly(pt.ring.field(), *g) : Poly::x_to_n_minus_one(pt.ring.field(), pt.n),
                                              pt.n);
      }
      const RCode c = RCode::build(pt.ring, *comps[0], *comps[1], *comps[2]);
      if (!(enumerated_set(pt.alphabet, c, limit) == s)) {
        r.fail("submodule differs from " + code_text(c));
        return;
      }
    }
  });
}

inline void check_presentations(const RingPoint& pt, CheckResult& r, EnumerationLimit limit,
                                std::uint64_t budget) {
  require_budget(pt.enumeration_work(), false, budget, "R-code enumeration");
  const std::size_t n = pt.n;
  const RingPoly xn1 = RingPoly::from_field_poly(pt.ring, Poly::x_to_n_minus_one(pt.ring.field(), n));
  for (const auto& t : pt.triples) {
    guarded(r, [&] {
      const RCode c = pt.code(t);
      const CodewordSet s = enumerated_set(pt.alphabet, c, limit);
      std::vector<Row> three;
      for (const RingPoly& g : generators_over_r(c)) three.push_back(ring_poly_row(pt.alphabet, g, n));
      const RingPoly g = single_generator(c);
      const RingPoly e = idempotent_over_r(c);
      const Row e_row = ring_poly_row(pt.alphabet, e, n);
      const CodewordSet by_three = oracle::ideal_closure(pt.alphabet, n, three, limit);
      const CodewordSet by_single = oracle::ideal_closure(pt.alphabet, n, {ring_poly_row(pt.alphabet, g, n)}, limit);
      const CodewordSet by_idem = oracle::ideal_closure(pt.alphabet, n, {e_row}, limit);
      std::size_t deg = 0;
      for (std::size_t i = 0; i < 3; ++i) deg += *c.component(static_cast<int>(i + 1)).generator().degree();
      bool overflow = false;
      const std::uint64_t expected_size = ringcyclic::detail::checked_pow(pt.ring.field().order(), 3 * n - deg, overflow);
      ++r.cases;
      const std::string who = "code=" + code_text(c);
      if (overflow || s.size() != expected_size) {
        r.fail(who + " |C|=" + std::to_string(s.size()));
      } else if (auto w = oracle::symmetric_difference_witness(by_three, s)) {
        r.fail(who + " three generators word=" + s.row_to_string(*w));
      } else if (auto w2 = oracle::symmetric_difference_witness(by_single, s)) {
        r.fail(who + " g=" + g.to_string() + " word=" + s.row_to_string(*w2));
      } else if (auto w3 = oracle::symmetric_difference_witness(by_idem, s)) {
        r.fail(who + " e=" + e.to_string() + " word=" + s.row_to_string(*w3));
      } else if (!oracle::is_unity(s, e_row) || !(oracle::cyclic_product(pt.alphabet, e_row, e_row) == e_row)) {
        r.fail(who + " e=" + e.to_string() + " is not an idempotent unity");
      } else if (!(g * single_generator_cofactor(c) == xn1)) {
        r.fail(who + " g=" + g.to_string() + " does not divide x^n-1");
      } else if (c.component(1) == c.component(2) && c.component(2) == c.component(3) &&
                 !(g == RingPoly::from_field_poly(pt.ring, c.component(1).generator()))) {
        r.fail(who + " equal components but g=" + g.to_string());
      } else if (!oracle::is_shift_closed(by_single)) {
        r.fail(who + " not shift-closed");
      }
    });
  }
}

// Fills `r` (constructive dual against the exhaustive one) and `idem` (the
// dual idempotent) from one exhaustive scan per code.
inline void check_dual_r(const RingPoint& pt, CheckResult& r, CheckResult& idem, const Options& opt) {
  bool overflow = false;
  const std::uint64_t space = ringcyclic::detail::checked_pow(pt.alphabet.size(), pt.n, overflow);
  require_budget(space * pt.triples.size(), overflow, opt.scan_budget, "exhaustive dual over R");
  require_budget(pt.enumeration_work(), false, opt.enumeration_budget, "R-code enumeration");
  for (const auto& t : pt.triples) {
    guarded(r, [&] {
      const RCode c = pt.code(t);
      const CodewordSet s = enumerated_set(pt.alphabet, c, opt.limit);
      const CodewordSet d = oracle::exhaustive_dual(s, opt.limit, opt.workers);
      const RCode cd = dual(c);
      const CodewordSet got = enumerated_set(pt.alphabet, cd, opt.limit);
      const std::uint64_t product = static_cast<std::uint64_t>(s.size()) * d.size();
      ++r.cases;
      if (auto w = oracle::symmetric_difference_witness(got, d)) {
        r.fail("code=" + code_text(c) + " word=" + d.row_to_string(*w));
      } else if (product != space) {
        r.fail("code=" + code_text(c) + " |C||C_perp|=" + std::to_string(product));
      }

      const RingPoly de = dual_idempotent(c);
      const RingPoly constructed = idempotent_over_r(cd);
      const Row row = ring_poly_row(pt.alphabet, de, pt.n);
      ++idem.cases;
      if (!(de == constructed)) {
        idem.fail("code=" + code_text(c) + " dual idempotent=" + de.to_string() + " constructed=" + constructed.to_string());
      } else if (!d.contains(row) || !oracle::is_unity(d, row) ||
                 !(oracle::ideal_closure(pt.alphabet, pt.n, {row}, opt.limit) == d)) {
        idem.fail("code=" + code_text(c) + " dual idempotent=" + de.to_string() + " does not generate the dual");
      }
    });
  }
  idem.skipped = r.skipped;
}

inline void check_self_dual(const RingPoint& pt, CheckResult& r, EnumerationLimit limit,
                                std::uint64_t budget) {
  require_budget(pt.enumeration_work(), false, budget, "R-code enumeration");
  std::vector<std::optional<bool>> component_self_dual(pt.base.codes.size());
  auto component = [&](std::size_t i) {
    if (!component_self_dual[i]) component_self_dual[i] = oracle::is_self_dual(pt.base.closure(i), limit);
    return *component_self_dual[i];
  };
  for (const auto& t : pt.triples) {
    guarded(r, [&] {
      const RCode c = pt.code(t);
      const bool whole = oracle::is_self_dual(enumerated_set(pt.alphabet, c, limit), limit);
      const bool parts = component(t[0]) && component(t[1]) && component(t[2]);
      ++r.cases;
      if (whole != parts || whole != is_self_dual(c)) {
        r.fail("code=" + code_text(c) + " self-dual over R=" + (whole ? "yes" : "no") +
               " components=" + (parts ? "yes" : "no"));
      }
    });
  }
}

inline bool block_shift_closed(const CodewordSet& image, std::size_t n) {
  for (std::size_t i = 0; i < image.size(); ++i) {
    const auto w = image.row(i);
    Row s(3 * n);
    for (std::size_t b = 0; b < 3; ++b) {
      for (std::size_t j = 0; j < n; ++j) s[b * n + (j + 1) % n] = w[b * n + j];
    }
    if (!image.contains(s)) return false;
  }
  return true;
}

inline void check_quasi_cyclic(const RingPoint& pt, CheckResult& r, EnumerationLimit limit,
                                std::uint64_t budget) {
  require_budget(pt.enumeration_work(), false, budget, "R-code enumeration");
  for (const auto& t : pt.triples) {
    guarded(r, [&] {
      const RCode c = pt.code(t);
      std::vector<Row> image;
      for (const RCodeword& w : c.enumerate_codewords(limit)) image.push_back(field_row(gray_map(w)));
      const CodewordSet s = CodewordSet::from_rows(pt.base.alphabet, 3 * pt.n, std::move(image), limit);
      ++r.cases;
      if (!block_shift_closed(s, pt.n) || !is_quasi_cyclic_order3(c, limit)) {
        r.fail("code=" + code_text(c) + " Gray image is not block-shift invariant");
      }
    });
  }
}

// Runs a whole check; a limit hit before any case ran marks it skipped.
inline void run_body(CheckResult& r, const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    if (e.code() == Errc::kLimitExceeded) {
      ++r.skipped;
    } else {
      r.fail(std::string("error=") + e.what());
    }
  } catch (const std::exception& e) {
    r.fail(std::string("error=") + e.what());
  }
}

inline CheckResult make_result(std::string id, std::string params) {
  CheckResult r;
  r.id = std::move(id);
  r.params = std::move(params);
  return r;
}

}  // namespace detail

// Every check over every valid grid point, in a fixed order.
inline Report run_suite(const Options& opt) {
  Report report;
  const EnumerationLimit limit = opt.limit;
  for (std::uint32_t p : opt.grid.p) {
    for (std::uint32_t k : opt.grid.k) {
      const Field field(p, k);
      for (std::uint32_t n : opt.grid.n) {
        if (n % p == 0) {
          report.invalid_points += opt.grid.r.empty() ? 1 : opt.grid.r.size();
          continue;
        }
        const std::string fparams = detail::field_params(field, n);
        std::optional<detail::CyclicPoint> pt;
        try {
          pt.emplace(field, n, limit);
        } catch (const Error& e) {
          if (e.code() != Errc::kLimitExceeded) throw;
          report.results.push_back(detail::make_result("cyclic-enumeration", fparams));
          continue;
        }
        auto run = [&](const char* id, const std::string& params, const std::function<void(CheckResult&)>& body) {
          CheckResult r = detail::make_result(id, params);
          detail::run_body(r, [&] { body(r); });
          report.results.push_back(std::move(r));
        };
        // Two report lines fed by one pass.
        auto run_pair = [&](const char* id1, const char* id2, const std::string& params,
                            const std::function<void(CheckResult&, CheckResult&)>& body) {
          CheckResult a = detail::make_result(id1, params);
          CheckResult b = detail::make_result(id2, params);
          detail::run_body(a, [&] { body(a, b); });
          if (a.failed && a.counterexample.rfind("error=", 0) == 0) b.fail(a.counterexample);
          if (!a.ran() && a.skipped > 0) b.skipped = a.skipped;
          report.results.push_back(std::move(a));
          report.results.push_back(std::move(b));
        };
        run("cyclic-enumeration", fparams, [&](CheckResult& r) { detail::check_enumeration(*pt, r, limit); });
        run("idempotent-uniqueness", fparams, [&](CheckResult& r) { detail::check_idempotent_uniqueness(*pt, r); });
        run("intersection", fparams, [&](CheckResult& r) {
          r.budget = opt.enumeration_budget;
          detail::check_intersection(*pt, r, opt.seed, limit);
        });
        run("sum", fparams, [&](CheckResult& r) {
          r.budget = opt.enumeration_budget;
          detail::check_sum(*pt, r, opt.seed, limit);
        });
        run_pair("dual", "dual-dimension", fparams,
                 [&](CheckResult& r, CheckResult& d) { detail::check_dual(*pt, r, d, opt); });
        run("dual-involution", fparams, [&](CheckResult& r) { detail::check_dual_involution(*pt, r); });

        for (std::uint32_t rr : opt.grid.r) {
          if (rr % p == 0 || rr < 2 || rr > RingSpec::kMaxR) {
            ++report.invalid_points;
            continue;
          }
          const detail::RingPoint rp(RingSpec(field, rr), *pt, limit);
          const std::string rparams = detail::ring_params(rp.ring, n);
          run("gray-cardinality", rparams, [&](CheckResult& r) { detail::check_gray_cardinality(rp, r, limit, opt.enumeration_budget); });
          run("gray-linear", rparams, [&](CheckResult& r) { detail::check_gray_linear(rp, r, opt.seed); });
          run("shift-closure", rparams, [&](CheckResult& r) { detail::check_shift_closure(rp, r, limit, opt.enumeration_budget); });
          run("submodule-converse", rparams, [&](CheckResult& r) { detail::check_submodule_converse(rp, r, limit); });
          run("presentations", rparams, [&](CheckResult& r) { detail::check_presentations(rp, r, limit, opt.enumeration_budget); });
          run_pair("dual-r", "dual-idempotent", rparams,
                   [&](CheckResult& r, CheckResult& d) { detail::check_dual_r(rp, r, d, opt); });
          run("self-dual", rparams, [&](CheckResult& r) { detail::check_self_dual(rp, r, limit, opt.enumeration_budget); });
          run("quasi-cyclic", rparams, [&](CheckResult& r) { detail::check_quasi_cyclic(rp, r, limit, opt.enumeration_budget); });
        }
      }
    }
  }
  return report;
}

}  // namespace ringcyclic::verify
