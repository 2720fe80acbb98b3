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

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ringcyclic/detail/expression_parser.hpp"
#include "ringcyclic/errors.hpp"
#include "ringcyclic/gf.hpp"
#include "ringcyclic/limits.hpp"

namespace ringcyclic {

// Coordinates (s, t, u) of e1*s + e2*t + e3*u in the subring
// R = e1 F ⊕ e2 F ⊕ e3 F.
struct Triple {
  FieldElement s;
  FieldElement t;
  FieldElement u;

  friend constexpr bool operator==(const Triple&, const Triple&) = default;
  friend constexpr auto operator<=>(const Triple&, const Triple&) = default;
};

class RingElement;

// R_r = F_{p^k}[v]/(v^{r+1} - v) with r > 1 and gcd(r, p) = 1. Holds the
// orthogonal idempotents e1, e2, e3, which are validated on construction.
class RingSpec {
 public:
  static constexpr std::uint32_t kMaxR = 64;

  RingSpec(Field field, std::uint32_t r);

  // "R(q;r)" with the default field modulus, or "R(q;r;modulus)".
  static RingSpec parse(std::string_view text);

  const Field& field() const noexcept { return data_->field; }
  std::uint32_t r() const noexcept { return data_->r; }
  // Number of coefficients 1, v, ..., v^r.
  std::size_t width() const noexcept { return data_->r + 1; }

  // |R_r| = (p^k)^{r+1}.
  std::uint64_t size() const {
    bool overflow = false;
    const std::uint64_t s = detail::checked_pow(field().order(), width(), overflow);
    if (overflow) throw Error(Errc::kLimitExceeded, "ring size overflows 64 bits");
    return s;
  }

  // |R| = (p^k)^3 for the subring spanned by e1, e2, e3.
  std::uint64_t subring_size() const {
    const std::uint64_t q = field().order();
    return q * q * q;
  }

  // i in {1, 2, 3}.
  RingElement idempotent(int i) const;
  std::array<RingElement, 3> idempotents() const;

  std::string description() const {
    std::string out = "R(" + std::to_string(field().order()) + ";" + std::to_string(r());
    if (!field().has_default_modulus()) out += ";" + detail::int_poly_to_string(field().modulus(), 'x');
    return out + ")";
  }

  friend bool operator==(const RingSpec& a, const RingSpec& b) noexcept {
    return a.data_ == b.data_ || (a.data_->r == b.data_->r && a.data_->field == b.data_->field);
  }

 private:
  friend class RingElement;
  friend Triple ring_to_triple(const RingElement& x);

  struct Data {
    Field field;
    std::uint32_t r;
    std::array<std::vector<FieldElement>, 3> idempotents;
    // Columns {0, 1, r} of the 3 x (r+1) matrix of e1, e2, e3 form an
    // invertible block; `solve` is its inverse, so (s, t, u) = solve * (x_0, x_1, x_r).
    std::array<std::size_t, 3> pivots;
    std::array<std::array<FieldElement, 3>, 3> solve;
  };

  std::shared_ptr<const Data> data_;
};

// Element a_0 + a_1 v + ... + a_r v^r of R_r.
class RingElement {
 public:
  explicit RingElement(RingSpec spec)
      : spec_(std::move(spec)), coeffs_(spec_.width(), Field::zero()) {}

  RingElement(RingSpec spec, std::vector<FieldElement> coeffs) : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != spec_.width()) {
      throw Error(Errc::kInvalidArgument, "ring element needs exactly r+1 coefficients");
    }
    for (FieldElement c : coeffs_) {
      if (!spec_.field().contains(c)) throw Error(Errc::kSpecMismatch, "coefficient outside the field");
    }
  }

  // Polynomial in v of any degree, reduced with v^{r+1} = v.
  static RingElement from_v_polynomial(const RingSpec& spec, std::span<const FieldElement> coeffs) {
    RingElement out(spec);
    const Field& f = spec.field();
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      const std::size_t e = reduce_exponent(j, spec.r());
      out.coeffs_[e] = f.add(out.coeffs_[e], coeffs[j]);
    }
    return out;
  }

  static RingElement scalar(const RingSpec& spec, FieldElement c) {
    RingElement out(spec);
    out.coeffs_[0] = c;
    return out;
  }

  static RingElement one(const RingSpec& spec) { return scalar(spec, Field::one()); }

  static RingElement v_power(const RingSpec& spec, std::size_t j) {
    RingElement out(spec);
    out.coeffs_[reduce_exponent(j, spec.r())] = Field::one();
    return out;
  }

  // "a0+a1*v+...+ar*v^r" in any term order; coefficients in field syntax.
  static RingElement parse(const RingSpec& spec, std::string_view text) {
    const Field& f = spec.field();
    const detail::MultiPoly parsed = detail::parse_expression(text, f.k() == 1 ? "v" : "va", f.p());
    std::vector<std::vector<std::uint64_t>> by_degree;
    for (const auto& [key, c] : parsed) {
      if (by_degree.size() <= key[0]) by_degree.resize(key[0] + 1);
      auto& inner = by_degree[key[0]];
      if (inner.size() <= key[1]) inner.resize(key[1] + 1, 0);
      inner[key[1]] = c;
    }
    std::vector<FieldElement> coeffs;
    for (const auto& inner : by_degree) coeffs.push_back(f.from_generator_powers(inner));
    return from_v_polynomial(spec, coeffs);
  }

  // v^j for j > r equals v^{((j-1) mod r) + 1}.
  static constexpr std::size_t reduce_exponent(std::size_t j, std::size_t r) noexcept {
    return j <= r ? j : ((j - 1) % r) + 1;
  }

  const RingSpec& spec() const noexcept { return spec_; }
  std::span<const FieldElement> coeffs() const noexcept { return coeffs_; }
  FieldElement coeff(std::size_t i) const { return coeffs_.at(i); }

  bool is_zero() const noexcept {
    for (FieldElement c : coeffs_) {
      if (c != Field::zero()) return false;
    }
    return true;
  }

  bool is_idempotent() const { return *this * *this == *this; }

  RingElement scaled(FieldElement c) const {
    RingElement out(spec_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = spec_.field().mul(coeffs_[i], c);
    return out;
  }

  RingElement operator-() const {
    RingElement out(spec_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = spec_.field().neg(coeffs_[i]);
    return out;
  }

  friend RingElement operator+(const RingElement& a, const RingElement& b) {
    a.require_same(b);
    RingElement out(a.spec_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out.coeffs_[i] = a.spec_.field().add(a.coeffs_[i], b.coeffs_[i]);
    return out;
  }

  friend RingElement operator-(const RingElement& a, const RingElement& b) {
    a.require_same(b);
    RingElement out(a.spec_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out.coeffs_[i] = a.spec_.field().sub(a.coeffs_[i], b.coeffs_[i]);
    return out;
  }

  friend RingElement operator*(const RingElement& a, const RingElement& b) {
    a.require_same(b);
    const Field& f = a.spec_.field();
    const std::size_t r = a.spec_.r();
    RingElement out(a.spec_);
    for (std::size_t i = 0; i <= r; ++i) {
      if (a.coeffs_[i] == Field::zero()) continue;
      for (std::size_t j = 0; j <= r; ++j) {
        if (b.coeffs_[j] == Field::zero()) continue;
        const std::size_t e = reduce_exponent(i + j, r);
        out.coeffs_[e] = f.add(out.coeffs_[e], f.mul(a.coeffs_[i], b.coeffs_[j]));
      }
    }
    return out;
  }

  friend bool operator==(const RingElement& a, const RingElement& b) noexcept {
    return a.spec_ == b.spec_ && a.coeffs_ == b.coeffs_;
  }

  // Ascending powers of v, e.g. "1+4*v^2"; zero prints as "0".
  std::string to_string() const {
    std::string out;
    const Field& f = spec_.field();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == Field::zero()) continue;
      if (!out.empty()) out += '+';
      const std::string c = f.to_string(coeffs_[i]);
      if (i == 0) {
        out += c;
        continue;
      }
      if (c != "1") out += c.find('+') != std::string::npos ? "(" + c + ")*" : c + "*";
      out += "v";
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  void require_same(const RingElement& other) const {
    if (!(spec_ == other.spec_)) {
      throw Error(Errc::kSpecMismatch, spec_.description() + " vs " + other.spec_.description());
    }
  }

  RingSpec spec_;
  std::vector<FieldElement> coeffs_;
};

inline RingSpec::RingSpec(Field field, std::uint32_t r) {
  if (r <= 1 || r > kMaxR) throw Error(Errc::kInvalidSpec, "r must be in [2, 64], got " + std::to_string(r));
  if (r % field.p() == 0) {
    throw Error(Errc::kInvalidSpec, "gcd(r, p) must be 1 (r=" + std::to_string(r) + ", p=" +
                                        std::to_string(field.p()) + ")");
  }
  auto data = std::make_shared<Data>(Data{field, r, {}, {}, {}});
  const Field& f = data->field;
  const FieldElement inv_r = f.inv(f.from_int(r));
  const FieldElement neg_inv_r = f.neg(inv_r);
  const FieldElement r_minus_one_over_r = f.mul(f.from_int(static_cast<std::int64_t>(r) - 1), inv_r);

  auto& [e1, e2, e3] = data->idempotents;
  e1.assign(r + 1, Field::zero());
  e2.assign(r + 1, Field::zero());
  e3.assign(r + 1, Field::zero());
  for (std::uint32_t i = 1; i <= r; ++i) e1[i] = inv_r;
  for (std::uint32_t i = 1; i < r; ++i) e2[i] = neg_inv_r;
  e2[r] = r_minus_one_over_r;
  e3[0] = Field::one();
  e3[r] = f.neg(Field::one());

  // Invert the block of e1, e2, e3 restricted to columns {0, 1, r} by
  // Gauss-Jordan elimination: rows are columns c, entries e_i[c].
  data->pivots = {0, 1, r};
  std::array<std::array<FieldElement, 6>, 3> aug{};
  for (std::size_t row = 0; row < 3; ++row) {
    for (std::size_t i = 0; i < 3; ++i) aug[row][i] = data->idempotents[i][data->pivots[row]];
    aug[row][3 + row] = Field::one();
  }
  for (std::size_t col = 0; col < 3; ++col) {
    std::size_t pivot = col;
    while (pivot < 3 && aug[pivot][col] == Field::zero()) ++pivot;
    if (pivot == 3) throw Error(Errc::kInvalidSpec, "idempotents are linearly dependent");
    std::swap(aug[pivot], aug[col]);
    const FieldElement inv = f.inv(aug[col][col]);
    for (auto& x : aug[col]) x = f.mul(x, inv);
    for (std::size_t row = 0; row < 3; ++row) {
      if (row == col || aug[row][col] == Field::zero()) continue;
      const FieldElement factor = aug[row][col];
      for (std::size_t j = 0; j < 6; ++j) aug[row][j] = f.sub(aug[row][j], f.mul(factor, aug[col][j]));
    }
  }
  for (std::size_t row = 0; row < 3; ++row) {
    for (std::size_t j = 0; j < 3; ++j) data->solve[row][j] = aug[row][3 + j];
  }
  data_ = std::move(data);

  // Orthogonal idempotents summing to one; these must hold for every valid spec.
  const std::array<RingElement, 3> e = idempotents();
  for (std::size_t i = 0; i < 3; ++i) {
    if (e[i].is_zero() || !e[i].is_idempotent()) {
      throw Error(Errc::kInvalidSpec, "e" + std::to_string(i + 1) + " is not a nonzero idempotent");
    }
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (!(e[i] * e[j]).is_zero()) throw Error(Errc::kInvalidSpec, "idempotents are not orthogonal");
    }
  }
  if (!(e[0] + e[1] + e[2] == RingElement::one(*this))) {
    throw Error(Errc::kInvalidSpec, "idempotents do not sum to 1");
  }
}

inline RingElement RingSpec::idempotent(int i) const {
  if (i < 1 || i > 3) throw Error(Errc::kInvalidArgument, "idempotent index must be 1, 2 or 3");
  return RingElement(*this, data_->idempotents[static_cast<std::size_t>(i - 1)]);
}

inline std::array<RingElement, 3> RingSpec::idempotents() const {
  return {idempotent(1), idempotent(2), idempotent(3)};
}

inline RingSpec RingSpec::parse(std::string_view text) {
  std::string_view s = detail::strip(text);
  if (s.size() < 4 || s.substr(0, 2) != "R(" || s.back() != ')') {
    throw Error(Errc::kParseError, "expected R(q;r), got \"" + std::string(text) + "\"");
  }
  s = s.substr(2, s.size() - 3);
  const auto first = s.find(';');
  if (first == std::string_view::npos) {
    throw Error(Errc::kParseError, "expected R(q;r), got \"" + std::string(text) + "\"");
  }
  std::string_view rest = s.substr(first + 1);
  const auto second = rest.find(';');
  const std::string_view r_text = second == std::string_view::npos ? rest : rest.substr(0, second);
  const std::string_view modulus_text = second == std::string_view::npos ? std::string_view{} : rest.substr(second + 1);
  const std::uint64_t r = detail::parse_uint(r_text, "r");
  if (r > kMaxR) throw Error(Errc::kInvalidSpec, "r too large");
  return RingSpec(detail::field_from_order_and_modulus(s.substr(0, first), modulus_text),
                  static_cast<std::uint32_t>(r));
}

inline RingElement triple_to_ring(const Triple& t, const RingSpec& spec) {
  const Field& f = spec.field();
  for (FieldElement c : {t.s, t.t, t.u}) {
    if (!f.contains(c)) throw Error(Errc::kSpecMismatch, "triple coordinate outside the field");
  }
  const auto e = spec.idempotents();
  return e[0].scaled(t.s) + e[1].scaled(t.t) + e[2].scaled(t.u);
}

// Inverse of triple_to_ring; throws kNotInSubring when x is outside
// span{e1, e2, e3} (possible only for r > 2).
inline Triple ring_to_triple(const RingElement& x) {
  const RingSpec& spec = x.spec();
  const auto& data = *spec.data_;
  const Field& f = data.field;
  std::array<FieldElement, 3> rhs{};
  for (std::size_t row = 0; row < 3; ++row) rhs[row] = x.coeffs()[data.pivots[row]];
  std::array<FieldElement, 3> sol{};
  for (std::size_t i = 0; i < 3; ++i) {
    FieldElement acc = Field::zero();
    for (std::size_t j = 0; j < 3; ++j) acc = f.add(acc, f.mul(data.solve[i][j], rhs[j]));
    sol[i] = acc;
  }
  for (std::size_t c = 0; c < spec.width(); ++c) {
    FieldElement acc = Field::zero();
    for (std::size_t i = 0; i < 3; ++i) acc = f.add(acc, f.mul(sol[i], data.idempotents[i][c]));
    if (acc != x.coeffs()[c]) {
      throw Error(Errc::kNotInSubring, x.to_string() + " is not in span{e1, e2, e3} of " + spec.description());
    }
  }
  return Triple{sol[0], sol[1], sol[2]};
}

inline bool ring_is_idempotent(const RingElement& x) { return x.is_idempotent(); }

}  // namespace ringcyclic
