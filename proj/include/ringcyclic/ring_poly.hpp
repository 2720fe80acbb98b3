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
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ringcyclic/detail/expression_parser.hpp"
#include "ringcyclic/errors.hpp"
#include "ringcyclic/poly.hpp"
#include "ringcyclic/ring_r.hpp"

namespace ringcyclic {

// Dense polynomial in x with coefficients in R_r, lowest degree first, no
// trailing zero coefficients. Carries the generators and idempotents of
// codes over R.
class RingPoly {
 public:
  explicit RingPoly(RingSpec spec) : spec_(std::move(spec)) {}

  RingPoly(RingSpec spec, std::vector<RingElement> coeffs) : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
    for (const RingElement& c : coeffs_) {
      if (!(c.spec() == spec_)) throw Error(Errc::kSpecMismatch, "coefficient from another ring");
    }
    trim();
  }

  // e * g(x): every coefficient of g multiplied by the ring element e.
  static RingPoly scaled(const RingElement& e, const Poly& g) {
    if (!(g.field() == e.spec().field())) throw Error(Errc::kSpecMismatch, "field of g differs from the ring's");
    std::vector<RingElement> coeffs;
    coeffs.reserve(g.coeffs().size());
    for (FieldElement c : g.coeffs()) coeffs.push_back(e.scaled(c));
    return RingPoly(e.spec(), std::move(coeffs));
  }

  static RingPoly from_field_poly(const RingSpec& spec, const Poly& g) {
    return scaled(RingElement::one(spec), g);
  }

  // Terms in x, v and (for extension fields) a, e.g. "(1+2*v)*x^2+v".
  static RingPoly parse(const RingSpec& spec, std::string_view text) {
    const Field& f = spec.field();
    const detail::MultiPoly parsed = detail::parse_expression(text, f.k() == 1 ? "xv" : "xva", f.p());
    // by_x[x exponent][v exponent][a exponent]
    std::vector<std::vector<std::vector<std::uint64_t>>> by_x;
    for (const auto& [key, c] : parsed) {
      if (by_x.size() <= key[0]) by_x.resize(key[0] + 1);
      auto& by_v = by_x[key[0]];
      if (by_v.size() <= key[1]) by_v.resize(key[1] + 1);
      auto& by_a = by_v[key[1]];
      if (by_a.size() <= key[2]) by_a.resize(key[2] + 1, 0);
      by_a[key[2]] = c;
    }
    std::vector<RingElement> coeffs;
    for (const auto& by_v : by_x) {
      std::vector<FieldElement> v_coeffs;
      for (const auto& by_a : by_v) v_coeffs.push_back(f.from_generator_powers(by_a));
      coeffs.push_back(RingElement::from_v_polynomial(spec, v_coeffs));
    }
    return RingPoly(spec, std::move(coeffs));
  }

  const RingSpec& spec() const noexcept { return spec_; }
  std::span<const RingElement> coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  std::optional<std::size_t> degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  RingElement coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : RingElement(spec_); }

  // Reduction modulo x^n - 1.
  RingPoly reduced(std::size_t n) const {
    if (n == 0) throw Error(Errc::kInvalidArgument, "length must be >= 1");
    if (coeffs_.size() <= n) return *this;
    std::vector<RingElement> out(n, RingElement(spec_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i % n] = out[i % n] + coeffs_[i];
    return RingPoly(spec_, std::move(out));
  }

  // The length-n coefficient vector of this polynomial mod x^n - 1.
  std::vector<RingElement> to_word(std::size_t n) const {
    const RingPoly r = reduced(n);
    std::vector<RingElement> out(n, RingElement(spec_));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) out[i] = r.coeffs_[i];
    return out;
  }

  // p(x^{-1}) in R[x]/(x^n - 1).
  RingPoly eval_at_x_inverse(std::size_t n) const {
    const RingPoly r = reduced(n);
    std::vector<RingElement> out(n, RingElement(spec_));
    for (std::size_t j = 0; j < r.coeffs_.size(); ++j) out[(n - j) % n] = r.coeffs_[j];
    return RingPoly(spec_, std::move(out));
  }

  friend RingPoly operator+(const RingPoly& a, const RingPoly& b) {
    a.require_same(b);
    std::vector<RingElement> out(std::max(a.coeffs_.size(), b.coeffs_.size()), RingElement(a.spec_));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
    return RingPoly(a.spec_, std::move(out));
  }

  friend RingPoly operator-(const RingPoly& a, const RingPoly& b) {
    a.require_same(b);
    std::vector<RingElement> out(std::max(a.coeffs_.size(), b.coeffs_.size()), RingElement(a.spec_));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
    return RingPoly(a.spec_, std::move(out));
  }

  friend RingPoly operator*(const RingPoly& a, const RingPoly& b) {
    a.require_same(b);
    if (a.is_zero() || b.is_zero()) return RingPoly(a.spec_);
    std::vector<RingElement> out(a.coeffs_.size() + b.coeffs_.size() - 1, RingElement(a.spec_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return RingPoly(a.spec_, std::move(out));
  }

  friend bool operator==(const RingPoly& a, const RingPoly& b) noexcept {
    return a.spec_ == b.spec_ && a.coeffs_ == b.coeffs_;
  }

  // Descending powers of x with ring coefficients in v-syntax.
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      if (coeffs_[i].is_zero()) continue;
      if (!out.empty()) out += '+';
      out += Poly::format_term(coeffs_[i].to_string(), "x", i);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  void require_same(const RingPoly& other) const {
    if (!(spec_ == other.spec_)) throw Error(Errc::kSpecMismatch, "ring polynomials over different rings");
  }

  RingSpec spec_;
  std::vector<RingElement> coeffs_;
};

}  // namespace ringcyclic
