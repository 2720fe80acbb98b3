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


// Brute-force engines over explicit codeword sets. Nothing here calls the
// constructive gcd/lcm/reciprocal machinery; codes are rebuilt from their
// generating vectors by linear closure and compared as sets.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ringcyclic/errors.hpp"
#include "ringcyclic/gf.hpp"
#include "ringcyclic/limits.hpp"
#include "ringcyclic/ring_r.hpp"

namespace ringcyclic::oracle {

using Symbol = std::uint32_t;
using Row = std::vector<Symbol>;

enum class AlphabetKind { kField, kSubring };

// Coordinate alphabet: F itself, or the subring R = span{e1, e2, e3} of R_r.
// Symbols are dense indices; a subring symbol s + q t + q^2 u names the
// element s e1 + t e2 + u e3, whose arithmetic is carried out on its
// v-coefficients.
class Alphabet {
 public:
  static constexpr std::uint32_t kTableLimit = 1024;

  static Alphabet field(const Field& f) {
    auto d = std::make_shared<Data>(f);
    d->kind = AlphabetKind::kField;
    d->size = f.order();
    d->coords = 1;
    d->basis = {1};
    d->one = 1;
    if (d->size <= kTableLimit) {
      d->add_table.resize(std::size_t{d->size} * d->size);
      d->mul_table.resize(std::size_t{d->size} * d->size);
      for (Symbol a = 0; a < d->size; ++a) {
        for (Symbol b = 0; b < d->size; ++b) {
          d->add_table[a * d->size + b] = f.add(FieldElement{a}, FieldElement{b}).raw;
          d->mul_table[a * d->size + b] = f.mul(FieldElement{a}, FieldElement{b}).raw;
        }
      }
    }
    return Alphabet(std::move(d));
  }

  static Alphabet subring(const RingSpec& ring, EnumerationLimit limit = EnumerationLimit{}) {
    const Field& f = ring.field();
    auto d = std::make_shared<Data>(f);
    d->kind = AlphabetKind::kSubring;
    d->ring = ring;
    d->size = static_cast<std::uint32_t>(detail::bounded_pow(f.order(), 3, limit, "subring alphabet"));
    d->coords = 3;
    const std::uint32_t q = f.order();
    d->basis = {1, q, q * q};
    const auto e = ring.idempotents();
    d->elements.reserve(d->size);
    for (Symbol sym = 0; sym < d->size; ++sym) {
      RingElement x(ring);
      Symbol rest = sym;
      for (std::size_t i = 0; i < 3; ++i) {
        x = x + e[i].scaled(FieldElement{rest % q});
        rest /= q;
      }
      d->lookup.emplace(raw_coeffs(x), sym);
      d->elements.push_back(std::move(x));
    }
    RINGCYCLIC_CHECK(d->lookup.size() == d->size, "e1, e2, e3 are linearly independent");
    d->one = d->lookup.at(raw_coeffs(RingElement::one(ring)));
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        const Symbol prod = d->lookup.at(raw_coeffs(e[i] * e[j]));
        for (std::size_t k = 0; k < 3; ++k) d->structure[i][j][k] = FieldElement{(prod / (k == 0 ? 1 : k == 1 ? q : q * q)) % q};
      }
    }
    if (d->size <= kTableLimit) {
      d->add_table.resize(std::size_t{d->size} * d->size);
      d->mul_table.resize(std::size_t{d->size} * d->size);
      for (Symbol a = 0; a < d->size; ++a) {
        for (Symbol b = 0; b < d->size; ++b) {
          d->add_table[a * d->size + b] = d->lookup.at(raw_coeffs(d->elements[a] + d->elements[b]));
          d->mul_table[a * d->size + b] = d->lookup.at(raw_coeffs(d->elements[a] * d->elements[b]));
        }
      }
    }
    return Alphabet(std::move(d));
  }

  AlphabetKind kind() const noexcept { return data_->kind; }
  const Field& base_field() const noexcept { return data_->field; }
  const std::optional<RingSpec>& ring() const noexcept { return data_->ring; }
  std::uint32_t size() const noexcept { return data_->size; }
  // F-coordinates per symbol.
  std::size_t coords() const noexcept { return data_->coords; }
  Symbol zero() const noexcept { return 0; }
  Symbol one() const noexcept { return data_->one; }
  // Symbols whose F-span is the whole alphabet.
  std::span<const Symbol> module_basis() const noexcept { return data_->basis; }

  Symbol add(Symbol a, Symbol b) const {
    if (!data_->add_table.empty()) return data_->add_table[a * data_->size + b];
    if (data_->kind == AlphabetKind::kField) return data_->field.add(FieldElement{a}, FieldElement{b}).raw;
    const Field& f = data_->field;
    std::array<FieldElement, 3> c;
    for (std::size_t i = 0; i < 3; ++i) c[i] = f.add(coordinate(a, i), coordinate(b, i));
    return from_coordinates(c);
  }

  // Additive inverse, coordinate by coordinate.
  Symbol neg(Symbol a) const {
    std::array<FieldElement, 3> c{};
    for (std::size_t i = 0; i < data_->coords; ++i) c[i] = data_->field.neg(coordinate(a, i));
    return from_coordinates(std::span<const FieldElement>(c.data(), data_->coords));
  }

  Symbol mul(Symbol a, Symbol b) const {
    if (!data_->mul_table.empty()) return data_->mul_table[a * data_->size + b];
    if (data_->kind == AlphabetKind::kField) return data_->field.mul(FieldElement{a}, FieldElement{b}).raw;
    // Bilinear expansion over the structure constants of e_i e_j.
    const Field& f = data_->field;
    std::array<FieldElement, 3> x, y, c{};
    for (std::size_t i = 0; i < 3; ++i) {
      x[i] = coordinate(a, i);
      y[i] = coordinate(b, i);
    }
    for (std::size_t i = 0; i < 3; ++i) {
      if (x[i] == Field::zero()) continue;
      for (std::size_t j = 0; j < 3; ++j) {
        if (y[j] == Field::zero()) continue;
        const FieldElement xy = f.mul(x[i], y[j]);
        for (std::size_t k = 0; k < 3; ++k) c[k] = f.add(c[k], f.mul(xy, data_->structure[i][j][k]));
      }
    }
    return from_coordinates(c);
  }

  // Subring symbol of s e1 + t e2 + u e3.
  Symbol symbol_of(const Triple& t) const {
    if (data_->kind != AlphabetKind::kSubring) throw Error(Errc::kInvalidArgument, "triples need a subring alphabet");
    const std::uint32_t q = data_->field.order();
    return t.s.raw + q * (t.t.raw + q * t.u.raw);
  }

  // Looks an element up by its v-coefficients; NotInSubring when absent.
  Symbol symbol_of(const RingElement& x) const {
    if (data_->kind != AlphabetKind::kSubring || !(x.spec() == *data_->ring)) {
      throw Error(Errc::kInvalidArgument, "ring element does not belong to this alphabet");
    }
    const auto it = data_->lookup.find(raw_coeffs(x));
    if (it == data_->lookup.end()) throw Error(Errc::kNotInSubring, x.to_string() + " is not in the subring");
    return it->second;
  }

  FieldElement coordinate(Symbol a, std::size_t j) const {
    const std::uint32_t q = data_->field.order();
    for (std::size_t i = 0; i < j; ++i) a /= q;
    return FieldElement{a % q};
  }

  Symbol from_coordinates(std::span<const FieldElement> c) const {
    Symbol out = 0;
    for (std::size_t j = c.size(); j-- > 0;) out = out * data_->field.order() + c[j].raw;
    return out;
  }

  std::string to_string(Symbol a) const {
    if (data_->kind == AlphabetKind::kField) return data_->field.to_string(FieldElement{a});
    return data_->elements[a].to_string();
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept {
    return a.data_ == b.data_ ||
           (a.data_->kind == b.data_->kind && a.data_->field == b.data_->field && a.data_->ring == b.data_->ring);
  }

 private:
  struct Data {
    explicit Data(Field f) : field(std::move(f)) {}
    Field field;
    AlphabetKind kind = AlphabetKind::kField;
    std::optional<RingSpec> ring;
    std::uint32_t size = 0;
    std::size_t coords = 1;
    std::vector<Symbol> basis;
    Symbol one = 1;
    std::vector<RingElement> elements;
    std::array<std::array<std::array<FieldElement, 3>, 3>, 3> structure{};
    std::map<std::vector<std::uint32_t>, Symbol> lookup;
    std::vector<Symbol> add_table;
    std::vector<Symbol> mul_table;
  };

  explicit Alphabet(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  static std::vector<std::uint32_t> raw_coeffs(const RingElement& x) {
    std::vector<std::uint32_t> out;
    for (FieldElement c : x.coeffs()) out.push_back(c.raw);
    return out;
  }

  std::shared_ptr<const Data> data_;
};

// Sorted, deduplicated set of words of length n over an alphabet.
class CodewordSet {
 public:
  CodewordSet(Alphabet alphabet, std::size_t n) : alphabet_(std::move(alphabet)), n_(n) {}

  static CodewordSet from_rows(Alphabet alphabet, std::size_t n, const std::vector<Row>& rows,
                               EnumerationLimit limit = EnumerationLimit{}) {
    std::vector<Symbol> flat;
    flat.reserve(rows.size() * n);
    for (const Row& r : rows) {
      if (r.size() != n) throw Error(Errc::kInvalidArgument, "codeword has the wrong length");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return from_flat(std::move(alphabet), n, std::move(flat), limit);
  }

  // Rows concatenated in any order, possibly repeated.
  static CodewordSet from_flat(Alphabet alphabet, std::size_t n, std::vector<Symbol> flat,
                               EnumerationLimit limit = EnumerationLimit{}) {
    CodewordSet out(std::move(alphabet), n);
    if (n == 0) return out;
    const std::size_t count = flat.size() / n;
    const std::uint64_t base = out.alphabet_.size();
    bool overflow = false;
    ringcyclic::detail::checked_pow(base, n, overflow);
    if (!overflow) {
      std::vector<std::uint64_t> keys(count);
      for (std::size_t i = 0; i < count; ++i) {
        std::uint64_t key = 0;
        for (std::size_t j = 0; j < n; ++j) key = key * base + flat[i * n + j];
        keys[i] = key;
      }
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      limit.require(keys.size(), "codeword set");
      out.data_.resize(keys.size() * n);
      for (std::size_t i = 0; i < keys.size(); ++i) {
        std::uint64_t key = keys[i];
        for (std::size_t j = n; j-- > 0;) {
          out.data_[i * n + j] = static_cast<Symbol>(key % base);
          key /= base;
        }
      }
      out.keys_ = std::move(keys);
      return out;
    }
    std::vector<std::size_t> order(count);
    for (std::size_t i = 0; i < count; ++i) order[i] = i;
    auto row_at = [&](std::size_t i) { return std::span<const Symbol>(flat).subspan(i * n, n); };
    auto less = [&](std::size_t a, std::size_t b) {
      const auto x = row_at(a), y = row_at(b);
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    };
    std::sort(order.begin(), order.end(), less);
    for (std::size_t i = 0; i < count; ++i) {
      if (i > 0 && std::ranges::equal(row_at(order[i - 1]), row_at(order[i]))) continue;
      out.data_.insert(out.data_.end(), row_at(order[i]).begin(), row_at(order[i]).end());
    }
    limit.require(out.size(), "codeword set");
    return out;
  }

  // Rows must already be sorted and distinct.
  static CodewordSet from_sorted_flat(Alphabet alphabet, std::size_t n, std::vector<Symbol> flat) {
    CodewordSet out(std::move(alphabet), n);
    out.data_ = std::move(flat);
    out.build_keys();
    RINGCYCLIC_DCHECK(out.is_canonical(), "flat codeword data is sorted and distinct");
    return out;
  }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return n_ == 0 ? 1 : data_.size() / n_; }
  std::span<const Symbol> row(std::size_t i) const { return std::span<const Symbol>(data_).subspan(i * n_, n_); }
  std::span<const Symbol> flat() const noexcept { return data_; }

  bool contains(std::span<const Symbol> w) const {
    if (w.size() != n_) return false;
    if (!keys_.empty() || (data_.empty() && n_ > 0)) {
      return std::binary_search(keys_.begin(), keys_.end(), encode(w));
    }
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      const auto r = row(mid);
      if (std::lexicographical_compare(r.begin(), r.end(), w.begin(), w.end())) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return lo < size() && std::ranges::equal(row(lo), w);
  }

  std::string row_to_string(std::span<const Symbol> w) const {
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out += ",";
      out += alphabet_.to_string(w[i]);
    }
    return out + ")";
  }

  friend bool operator==(const CodewordSet& a, const CodewordSet& b) noexcept {
    return a.n_ == b.n_ && a.alphabet_ == b.alphabet_ && a.data_ == b.data_;
  }

 private:
  // Rows as base-|A| integers when A^n fits in 64 bits; otherwise empty.
  void build_keys() {
    bool overflow = false;
    ringcyclic::detail::checked_pow(alphabet_.size(), n_, overflow);
    if (overflow || n_ == 0) return;
    keys_.resize(size());
    for (std::size_t i = 0; i < keys_.size(); ++i) keys_[i] = encode(row(i));
  }

  std::uint64_t encode(std::span<const Symbol> w) const {
    std::uint64_t key = 0;
    for (Symbol x : w) key = key * alphabet_.size() + x;
    return key;
  }

  bool is_canonical() const {
    for (std::size_t i = 1; i < size(); ++i) {
      const auto a = row(i - 1), b = row(i);
      if (!std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end())) return false;
    }
    return true;
  }

  Alphabet alphabet_;
  std::size_t n_;
  std::vector<Symbol> data_;
  std::vector<std::uint64_t> keys_;
};

inline void require_same_parameters(const CodewordSet& a, const CodewordSet& b) {
  if (a.n() != b.n() || !(a.alphabet() == b.alphabet())) {
    throw Error(Errc::kMixedParameters, "codeword sets have different alphabets or lengths");
  }
}

inline bool sets_equal(const CodewordSet& a, const CodewordSet& b) {
  require_same_parameters(a, b);
  return a == b;
}

// First element of `a` missing from `b`, if any.
inline std::optional<Row> first_missing(const CodewordSet& a, const CodewordSet& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!b.contains(a.row(i))) return Row(a.row(i).begin(), a.row(i).end());
  }
  return std::nullopt;
}

// A witness for a != b: a row in exactly one of the sets.
inline std::optional<Row> symmetric_difference_witness(const CodewordSet& a, const CodewordSet& b) {
  if (auto w = first_missing(a, b)) return w;
  return first_missing(b, a);
}

inline Row shift_row(std::span<const Symbol> w) {
  Row out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[(i + 1) % w.size()] = w[i];
  return out;
}

// Product in A[x]/(x^n - 1) of two coefficient rows.
inline Row cyclic_product(const Alphabet& a, std::span<const Symbol> x, std::span<const Symbol> y) {
  const std::size_t n = x.size();
  Row out(n, a.zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == a.zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = (i + j) % n;
      out[k] = a.add(out[k], a.mul(x[i], y[j]));
    }
  }
  return out;
}

inline Row row_sum(const Alphabet& a, std::span<const Symbol> x, std::span<const Symbol> y) {
  Row out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a.add(x[i], y[i]);
  return out;
}

// Σ x_i y_i in the alphabet.
inline Symbol inner_product(const Alphabet& a, std::span<const Symbol> x, std::span<const Symbol> y) {
  Symbol acc = a.zero();
  for (std::size_t i = 0; i < x.size(); ++i) acc = a.add(acc, a.mul(x[i], y[i]));
  return acc;
}

namespace detail {

// Row-echelon basis of an F-subspace of F^dim, pivots normalized to 1.
class Echelon {
 public:
  Echelon(Field field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<std::vector<FieldElement>>& rows() const noexcept { return rows_; }

  std::vector<FieldElement> reduce(std::vector<FieldElement> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const FieldElement c = v[pivots_[i]];
      if (c == Field::zero()) continue;
      for (std::size_t j = pivots_[i]; j < dim_; ++j) {
        v[j] = field_.sub(v[j], field_.mul(c, rows_[i][j]));
      }
    }
    return v;
  }

  // Adds v to the span; true when the rank grew.
  bool insert(std::vector<FieldElement> v) {
    v = reduce(std::move(v));
    std::size_t pivot = 0;
    while (pivot < dim_ && v[pivot] == Field::zero()) ++pivot;
    if (pivot == dim_) return false;
    const FieldElement inv = field_.inv(v[pivot]);
    for (std::size_t j = pivot; j < dim_; ++j) v[j] = field_.mul(v[j], inv);
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
  }

  // Reduced row echelon form sorted by pivot: a canonical key for the span.
  std::vector<std::vector<FieldElement>> canonical() const {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    std::vector<std::vector<FieldElement>> out;
    for (std::size_t i : order) out.push_back(rows_[i]);
    for (std::size_t i = out.size(); i-- > 0;) {
      const std::size_t pi = pivots_[order[i]];
      for (std::size_t j = 0; j < out.size(); ++j) {
        if (j == i) continue;
        const FieldElement c = out[j][pi];
        if (c == Field::zero()) continue;
        for (std::size_t col = 0; col < dim_; ++col) {
          out[j][col] = field_.sub(out[j][col], field_.mul(c, out[i][col]));
        }
      }
    }
    return out;
  }

 private:
  Field field_;
  std::size_t dim_;
  std::vector<std::vector<FieldElement>> rows_;
  std::vector<std::size_t> pivots_;
};

inline std::vector<FieldElement> to_coordinates(const Alphabet& a, std::span<const Symbol> w) {
  std::vector<FieldElement> out;
  out.reserve(w.size() * a.coords());
  for (Symbol s : w) {
    for (std::size_t j = 0; j < a.coords(); ++j) out.push_back(a.coordinate(s, j));
  }
  return out;
}

inline Row from_coordinates(const Alphabet& a, std::span<const FieldElement> c) {
  const std::size_t m = a.coords();
  Row out(c.size() / m);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.from_coordinates(c.subspan(i * m, m));
  return out;
}

// Every F-combination of the basis rows of `e`.
inline CodewordSet enumerate_span(const Alphabet& a, std::size_t n, const Echelon& e, EnumerationLimit limit) {
  const Field& f = a.base_field();
  const std::uint64_t count = ringcyclic::detail::bounded_pow(f.order(), e.rank(), limit, "span enumeration");
  const std::vector<FieldElement> scalars = f.enumerate();
  const std::size_t m = a.coords();
  const std::size_t dim = n * m;
  std::vector<Symbol> flat;
  flat.reserve(count * n);
  std::vector<std::vector<FieldElement>> acc(e.rank() + 1, std::vector<FieldElement>(dim, Field::zero()));
  // acc[level] holds the partial sum of the first `level` scaled rows.
  auto visit = [&](auto&& self, std::size_t level) -> void {
    if (level == e.rank()) {
      const std::span<const FieldElement> c = acc[level];
      for (std::size_t i = 0; i < n; ++i) flat.push_back(a.from_coordinates(c.subspan(i * m, m)));
      return;
    }
    const auto& row = e.rows()[level];
    for (FieldElement c : scalars) {
      for (std::size_t j = 0; j < dim; ++j) acc[level + 1][j] = f.add(acc[level][j], f.mul(c, row[j]));
      self(self, level + 1);
    }
  };
  visit(visit, 0);
  return CodewordSet::from_flat(a, n, std::move(flat), limit);
}

inline Echelon span_basis(const CodewordSet& s) {
  Echelon e(s.alphabet().base_field(), s.n() * s.alphabet().coords());
  for (std::size_t i = 0; i < s.size(); ++i) e.insert(to_coordinates(s.alphabet(), s.row(i)));
  return e;
}

// Fixed point of span, σ and multiplication by the alphabet's module basis.
inline Echelon closure_basis(const Alphabet& a, std::size_t n, const std::vector<Row>& generators) {
  Echelon e(a.base_field(), n * a.coords());
  std::vector<Row> queue;
  auto push = [&](const Row& w) {
    if (e.insert(to_coordinates(a, w))) queue.push_back(w);
  };
  for (const Row& g : generators) {
    if (g.size() != n) throw Error(Errc::kInvalidArgument, "generator has the wrong length");
    push(g);
  }
  while (!queue.empty()) {
    const Row w = std::move(queue.back());
    queue.pop_back();
    push(shift_row(w));
    for (Symbol b : a.module_basis()) {
      Row bw(n);
      for (std::size_t i = 0; i < n; ++i) bw[i] = a.mul(b, w[i]);
      push(bw);
    }
  }
  return e;
}

}  // namespace detail

// All words of A^n in lexicographic order.
inline CodewordSet full_space(const Alphabet& a, std::size_t n, EnumerationLimit limit = EnumerationLimit{}) {
  const std::uint64_t count = ringcyclic::detail::bounded_pow(a.size(), n, limit, "full space");
  std::vector<Symbol> flat;
  flat.reserve(count * n);
  Row w(n, 0);
  for (std::uint64_t i = 0; i < count; ++i) {
    flat.insert(flat.end(), w.begin(), w.end());
    for (std::size_t j = n; j-- > 0;) {
      if (++w[j] < a.size()) break;
      w[j] = 0;
    }
  }
  return CodewordSet::from_sorted_flat(a, n, std::move(flat));
}

// Smallest set containing the generators that is closed under addition,
// scaling by every alphabet element and σ.
inline CodewordSet ideal_closure(const Alphabet& a, std::size_t n, const std::vector<Row>& generators,
                                 EnumerationLimit limit = EnumerationLimit{}) {
  return detail::enumerate_span(a, n, detail::closure_basis(a, n, generators), limit);
}

inline CodewordSet ideal_closure(const CodewordSet& s, EnumerationLimit limit = EnumerationLimit{}) {
  std::vector<Row> gens;
  for (std::size_t i = 0; i < s.size(); ++i) gens.emplace_back(s.row(i).begin(), s.row(i).end());
  return ideal_closure(s.alphabet(), s.n(), gens, limit);
}

// {x in A^n : Σ x_i c_i = 0 for all c in S}. Orthogonality is tested against
// an F-basis of span(S), which is equivalent by bilinearity. The scan is
// split across `workers` threads by leading symbol and merged in order.
inline CodewordSet exhaustive_dual(const CodewordSet& s, EnumerationLimit limit = EnumerationLimit{},
                                   unsigned workers = 1) {
  const Alphabet& a = s.alphabet();
  const std::size_t n = s.n();
  const std::uint64_t total = ringcyclic::detail::bounded_pow(a.size(), n, limit, "exhaustive dual");
  std::vector<Row> basis;
  const detail::Echelon span = detail::span_basis(s);
  for (const auto& v : span.rows()) basis.push_back(detail::from_coordinates(a, v));
  if (n == 0) return CodewordSet::from_sorted_flat(a, 0, {});

  (void)total;
  const std::size_t last = n - 1;
  const std::size_t nb = basis.size();
  // col[j * n + pos][x] = x b_j[pos].
  std::vector<std::vector<Symbol>> col(nb * n, std::vector<Symbol>(a.size()));
  for (std::size_t j = 0; j < nb; ++j) {
    for (std::size_t pos = 0; pos < n; ++pos) {
      for (Symbol x = 0; x < a.size(); ++x) col[j * n + pos][x] = a.mul(x, basis[j][pos]);
    }
  }
  std::vector<Symbol> neg(a.size());
  for (Symbol x = 0; x < a.size(); ++x) neg[x] = a.neg(x);
  // Last-position candidates grouped by their product with b_0.
  std::vector<std::vector<Symbol>> bucket(nb == 0 ? 0 : a.size());
  for (Symbol x = 0; nb != 0 && x < a.size(); ++x) bucket[col[last][x]].push_back(x);

  workers = std::max(1u, std::min<unsigned>(workers, a.size()));
  std::vector<std::vector<Symbol>> parts(workers);
  auto scan = [&](unsigned worker) {
    const Symbol lo = static_cast<Symbol>(std::uint64_t{a.size()} * worker / workers);
    const Symbol hi = static_cast<Symbol>(std::uint64_t{a.size()} * (worker + 1) / workers);
    std::vector<Symbol>& out = parts[worker];
    Row w(n, 0);
    // prefix[j * (n + 1) + i] = Σ_{t < i} w_t b_j[t].
    std::vector<Symbol> prefix(nb * (n + 1), a.zero());
    auto visit = [&](auto&& self, std::size_t pos) -> void {
      const Symbol first = pos == 0 ? lo : 0;
      const Symbol end = pos == 0 ? hi : a.size();
      if (pos == last) {
        auto accept = [&](Symbol x) {
          for (std::size_t j = 1; j < nb; ++j) {
            if (a.add(prefix[j * (n + 1) + pos], col[j * n + pos][x]) != a.zero()) return;
          }
          w[pos] = x;
          out.insert(out.end(), w.begin(), w.end());
        };
        if (nb == 0) {
          for (Symbol x = first; x < end; ++x) accept(x);
        } else {
          for (Symbol x : bucket[neg[prefix[pos]]]) {
            if (x >= first && x < end) accept(x);
          }
        }
        return;
      }
      for (Symbol x = first; x < end; ++x) {
        w[pos] = x;
        for (std::size_t j = 0; j < nb; ++j) {
          prefix[j * (n + 1) + pos + 1] = a.add(prefix[j * (n + 1) + pos], col[j * n + pos][x]);
        }
        self(self, pos + 1);
      }
    };
    visit(visit, 0);
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < workers; ++t) threads.emplace_back(scan, t);
    for (auto& t : threads) t.join();
  }
  std::vector<Symbol> flat;
  for (auto& p : parts) flat.insert(flat.end(), p.begin(), p.end());
  limit.require(flat.size() / n, "exhaustive dual");
  return CodewordSet::from_sorted_flat(a, n, std::move(flat));
}

// Every e in A[x]/(x^n - 1) with e^2 = e, as coefficient rows, sorted.
inline CodewordSet idempotent_census(const Alphabet& a, std::size_t n, EnumerationLimit limit = EnumerationLimit{}) {
  const CodewordSet all = full_space(a, n, limit);
  std::vector<Symbol> flat;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto e = all.row(i);
    const Row sq = cyclic_product(a, e, e);
    if (std::ranges::equal(sq, e)) flat.insert(flat.end(), e.begin(), e.end());
  }
  return CodewordSet::from_sorted_flat(a, n, std::move(flat));
}

inline CodewordSet set_intersection(const CodewordSet& x, const CodewordSet& y) {
  require_same_parameters(x, y);
  std::vector<Symbol> flat;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (y.contains(x.row(i))) flat.insert(flat.end(), x.row(i).begin(), x.row(i).end());
  }
  return CodewordSet::from_sorted_flat(x.alphabet(), x.n(), std::move(flat));
}

// {a + b : a in x, b in y}.
inline CodewordSet set_sum(const CodewordSet& x, const CodewordSet& y, EnumerationLimit limit = EnumerationLimit{}) {
  require_same_parameters(x, y);
  const Alphabet& a = x.alphabet();
  const std::size_t n = x.n();
  bool overflow = false;
  const std::uint64_t space = ringcyclic::detail::checked_pow(a.size(), n, overflow);
  if (!overflow && space <= kHardEnumerationCeiling) {
    std::vector<bool> seen(space, false);
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = 0; j < y.size(); ++j) {
        std::uint64_t code = 0;
        for (std::size_t c = 0; c < n; ++c) code = code * a.size() + a.add(x.row(i)[c], y.row(j)[c]);
        seen[code] = true;
      }
    }
    std::vector<Symbol> flat;
    Row w(n);
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < space; ++code) {
      if (!seen[code]) continue;
      std::uint64_t rest = code;
      for (std::size_t c = n; c-- > 0;) {
        w[c] = static_cast<Symbol>(rest % a.size());
        rest /= a.size();
      }
      flat.insert(flat.end(), w.begin(), w.end());
      ++count;
    }
    limit.require(count, "set sum");
    return CodewordSet::from_sorted_flat(a, n, std::move(flat));
  }
  std::vector<Row> rows;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) rows.push_back(row_sum(a, x.row(i), y.row(j)));
  }
  return CodewordSet::from_rows(a, n, std::move(rows), limit);
}

// span(x ∪ y); equals set_sum when both sets are subspaces.
inline CodewordSet subspace_sum(const CodewordSet& x, const CodewordSet& y,
                                EnumerationLimit limit = EnumerationLimit{}) {
  require_same_parameters(x, y);
  detail::Echelon e = detail::span_basis(x);
  for (std::size_t i = 0; i < y.size(); ++i) e.insert(detail::to_coordinates(y.alphabet(), y.row(i)));
  return detail::enumerate_span(x.alphabet(), x.n(), e, limit);
}

inline bool is_shift_closed(const CodewordSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!s.contains(shift_row(s.row(i)))) return false;
  }
  return true;
}

inline bool is_additively_closed(const CodewordSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i; j < s.size(); ++j) {
      if (!s.contains(row_sum(s.alphabet(), s.row(i), s.row(j)))) return false;
    }
  }
  return true;
}

// e lies in S and e c = c for every c in S, multiplying in A[x]/(x^n - 1).
inline bool is_unity(const CodewordSet& s, std::span<const Symbol> e) {
  if (!s.contains(e)) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::ranges::equal(cyclic_product(s.alphabet(), e, s.row(i)), s.row(i))) return false;
  }
  return true;
}

// Elements of `candidates` that lie in S and act as its unity.
inline std::vector<Row> unities_in(const CodewordSet& s, const CodewordSet& candidates) {
  std::vector<Row> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto e = candidates.row(i);
    if (is_unity(s, e)) out.emplace_back(e.begin(), e.end());
  }
  return out;
}

// For a field alphabet: the monic codeword of least degree, as ascending
// coefficients. nullopt for {0}.
inline std::optional<std::vector<FieldElement>> canonical_generator(const CodewordSet& s) {
  if (s.alphabet().kind() != AlphabetKind::kField) {
    throw Error(Errc::kInvalidArgument, "canonical generator needs a field alphabet");
  }
  std::optional<std::vector<FieldElement>> best;
  std::size_t best_degree = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto w = s.row(i);
    std::size_t len = w.size();
    while (len > 0 && w[len - 1] == 0) --len;
    if (len == 0 || w[len - 1] != 1) continue;
    if (!best || len - 1 < best_degree) {
      best_degree = len - 1;
      best = std::vector<FieldElement>();
      for (std::size_t j = 0; j < len; ++j) best->push_back(FieldElement{w[j]});
    }
  }
  return best;
}

// Coordinate i (0, 1, 2) of every word of a subring-alphabet set, as a set
// over F.
inline CodewordSet component_projection(const CodewordSet& s, std::size_t i) {
  const Alphabet& a = s.alphabet();
  if (a.kind() != AlphabetKind::kSubring) throw Error(Errc::kInvalidArgument, "projection needs a subring alphabet");
  std::vector<Row> rows;
  for (std::size_t r = 0; r < s.size(); ++r) {
    Row w(s.n());
    for (std::size_t c = 0; c < s.n(); ++c) w[c] = a.coordinate(s.row(r)[c], i).raw;
    rows.push_back(std::move(w));
  }
  return CodewordSet::from_rows(Alphabet::field(a.base_field()), s.n(), std::move(rows));
}

// Concatenations (a | b | c) for a in x, b in y, c in z.
inline CodewordSet concatenation_product(const CodewordSet& x, const CodewordSet& y, const CodewordSet& z,
                                         EnumerationLimit limit = EnumerationLimit{}) {
  require_same_parameters(x, y);
  require_same_parameters(x, z);
  limit.require(static_cast<std::uint64_t>(x.size()) * y.size() * z.size(), "concatenation product");
  const std::size_t n = x.n();
  std::vector<Symbol> flat;
  flat.reserve(x.size() * y.size() * z.size() * 3 * n);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      for (std::size_t k = 0; k < z.size(); ++k) {
        flat.insert(flat.end(), x.row(i).begin(), x.row(i).end());
        flat.insert(flat.end(), y.row(j).begin(), y.row(j).end());
        flat.insert(flat.end(), z.row(k).begin(), z.row(k).end());
      }
    }
  }
  return CodewordSet::from_sorted_flat(Alphabet(x.alphabet()), 3 * n, std::move(flat));
}

// True when Σ x_i y_i = 0 for all x, y in S.
inline bool is_self_orthogonal(const CodewordSet& s) {
  std::vector<Row> basis;
  const detail::Echelon span = detail::span_basis(s);
  for (const auto& v : span.rows()) basis.push_back(detail::from_coordinates(s.alphabet(), v));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      if (inner_product(s.alphabet(), basis[i], basis[j]) != s.alphabet().zero()) return false;
    }
  }
  return true;
}

inline bool is_self_dual(const CodewordSet& s, EnumerationLimit limit = EnumerationLimit{}) {
  return is_self_orthogonal(s) && exhaustive_dual(s, limit) == s;
}

// Every σ-closed submodule of A^n: the closures of single words, then closed
// under pairwise sums until nothing new appears.
inline std::vector<CodewordSet> all_cyclic_submodules(const Alphabet& a, std::size_t n,
                                                      EnumerationLimit limit = EnumerationLimit{}) {
  const CodewordSet space = full_space(a, n, limit);
  using Key = std::vector<std::vector<FieldElement>>;
  std::map<Key, std::vector<Row>> found;
  for (std::size_t i = 0; i < space.size(); ++i) {
    const Row g(space.row(i).begin(), space.row(i).end());
    const detail::Echelon e = detail::closure_basis(a, n, {g});
    found.emplace(e.canonical(), std::vector<Row>{g});
  }
  std::vector<Key> frontier;
  for (const auto& [k, v] : found) frontier.push_back(k);
  while (!frontier.empty()) {
    std::vector<Key> next;
    const std::vector<std::pair<Key, std::vector<Row>>> snapshot(found.begin(), found.end());
    for (const Key& fk : frontier) {
      const std::vector<Row> fg = found.at(fk);
      for (const auto& [k, gens] : snapshot) {
        std::vector<Row> combined = fg;
        combined.insert(combined.end(), gens.begin(), gens.end());
        const detail::Echelon e = detail::closure_basis(a, n, combined);
        Key key = e.canonical();
        if (found.emplace(key, combined).second) next.push_back(std::move(key));
      }
    }
    frontier = std::move(next);
  }
  std::vector<CodewordSet> out;
  for (const auto& [k, gens] : found) out.push_back(ideal_closure(a, n, gens, limit));
  return out;
}

}  // namespace ringcyclic::oracle
