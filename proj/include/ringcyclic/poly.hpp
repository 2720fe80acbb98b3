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
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ringcyclic/detail/expression_parser.hpp"
#include "ringcyclic/detail/fault_injection.hpp"
#include "ringcyclic/errors.hpp"
#include "ringcyclic/gf.hpp"
#include "ringcyclic/limits.hpp"

namespace ringcyclic {

// Dense polynomial over F_{p^k}, lowest degree first. Canonical: no trailing
// zero coefficients, so the zero polynomial has no coefficients and no degree.
class Poly {
 public:
  explicit Poly(Field field) : field_(std::move(field)) {}

  Poly(Field field, std::vector<FieldElement> coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (FieldElement c : coeffs_) {
      if (!field_.contains(c)) throw Error(Errc::kSpecMismatch, "coefficient not in " + field_.description());
    }
    trim();
  }

  static Poly constant(const Field& field, FieldElement c) { return Poly(field, {c}); }

  static Poly monomial(const Field& field, FieldElement c, std::size_t degree) {
    std::vector<FieldElement> coeffs(degree + 1, Field::zero());
    coeffs[degree] = c;
    return Poly(field, std::move(coeffs));
  }

  // Integer coefficients, lowest degree first, mapped into the prime subfield.
  static Poly from_ints(const Field& field, std::initializer_list<std::int64_t> ints) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(ints.size());
    for (std::int64_t v : ints) coeffs.push_back(field.from_int(v));
    return Poly(field, std::move(coeffs));
  }

  static Poly x_to_n_minus_one(const Field& field, std::size_t n) {
    std::vector<FieldElement> coeffs(n + 1, Field::zero());
    coeffs[n] = Field::one();
    coeffs[0] = field.add(coeffs[0], field.neg(Field::one()));
    return Poly(field, std::move(coeffs));
  }

  // Accepts sums of terms c*x^d in any order; `*` may be omitted and field
  // coefficients of extension fields are written in `a`, e.g. "(a+1)*x^2+a".
  static Poly parse(const Field& field, std::string_view text) {
    const detail::MultiPoly parsed = detail::parse_expression(text, field.k() == 1 ? "x" : "xa", field.p());
    std::vector<std::vector<std::uint64_t>> by_degree;
    for (const auto& [key, c] : parsed) {
      if (by_degree.size() <= key[0]) by_degree.resize(key[0] + 1);
      auto& inner = by_degree[key[0]];
      if (inner.size() <= key[1]) inner.resize(key[1] + 1, 0);
      inner[key[1]] = c;
    }
    std::vector<FieldElement> coeffs;
    coeffs.reserve(by_degree.size());
    for (const auto& inner : by_degree) coeffs.push_back(field.from_generator_powers(inner));
    return Poly(field, std::move(coeffs));
  }

  const Field& field() const noexcept { return field_; }
  std::span<const FieldElement> coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  // nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  FieldElement coeff(std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : Field::zero();
  }

  FieldElement leading() const {
    if (coeffs_.empty()) throw Error(Errc::kZeroPolynomial, "leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == Field::one(); }

  // The zero polynomial is returned unchanged.
  Poly monic() const {
    if (coeffs_.empty() || is_monic()) return *this;
    return scaled(field_.inv(coeffs_.back()));
  }

  Poly scaled(FieldElement c) const {
    std::vector<FieldElement> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = field_.mul(coeffs_[i], c);
    return Poly(field_, std::move(out));
  }

  FieldElement evaluate(FieldElement x) const {
    FieldElement acc = Field::zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), coeffs_[i]);
    return acc;
  }

  Poly operator-() const {
    std::vector<FieldElement> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = field_.neg(coeffs_[i]);
    return Poly(field_, std::move(out));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    a.require_same_field(b);
    std::vector<FieldElement> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field_.add(a.coeff(i), b.coeff(i));
    return Poly(a.field_, std::move(out));
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    a.require_same_field(b);
    std::vector<FieldElement> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field_.sub(a.coeff(i), b.coeff(i));
    return Poly(a.field_, std::move(out));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.require_same_field(b);
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    const Field& f = a.field_;
    std::vector<FieldElement> out(a.coeffs_.size() + b.coeffs_.size() - 1, Field::zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == Field::zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
      }
    }
    return Poly(f, std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) noexcept {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  // Descending degree, e.g. "x^2+2*x+1"; multi-term coefficients are
  // parenthesized.
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      if (coeffs_[i] == Field::zero()) continue;
      if (!out.empty()) out += '+';
      out += format_term(field_.to_string(coeffs_[i]), "x", i);
    }
    return out;
  }

  void require_same_field(const Poly& other) const {
    if (!(field_ == other.field_)) {
      throw Error(Errc::kSpecMismatch,
                  "polynomials over " + field_.description() + " and " + other.field_.description());
    }
  }

  // Shared by the printers of polynomials with field or ring coefficients.
  static std::string format_term(const std::string& coeff, std::string_view symbol, std::size_t degree) {
    if (degree == 0) return coeff;
    std::string out;
    if (coeff != "1") {
      const bool compound = coeff.find('+') != std::string::npos;
      out += compound ? "(" + coeff + ")*" : coeff + "*";
    }
    out += symbol;
    if (degree > 1) out += "^" + std::to_string(degree);
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Field::zero()) coeffs_.pop_back();
  }

  Field field_;
  std::vector<FieldElement> coeffs_;
};

// Degree first, then lexicographic on (c_0, c_1, ...) using the field's
// lexicographic element order. The zero polynomial sorts first.
inline bool poly_less(const Poly& a, const Poly& b) {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return !da.has_value() || (db.has_value() && *da < *db);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] != b.coeffs()[i]) return a.field().lex_less(a.coeffs()[i], b.coeffs()[i]);
  }
  return false;
}

struct DivMod {
  Poly quotient;
  Poly remainder;
};

inline DivMod divmod(const Poly& a, const Poly& b) {
  a.require_same_field(b);
  if (b.is_zero()) throw Error(Errc::kDivisionByZero, "division by the zero polynomial");
  const Field& f = a.field();
  if (a.is_zero() || *a.degree() < *b.degree()) return {Poly(f), a};
  std::vector<FieldElement> rem(a.coeffs().begin(), a.coeffs().end());
  const std::size_t db = *b.degree();
  std::vector<FieldElement> quot(rem.size() - db, Field::zero());
  const FieldElement lead_inv = f.inv(b.leading());
  for (std::size_t i = rem.size(); i-- > db;) {
    const FieldElement c = f.mul(rem[i], lead_inv);
    if (c == Field::zero()) continue;
    quot[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, b.coeffs()[j]));
    }
  }
  rem.resize(db);
  return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

// Exact quotient; throws kNotADivisor if b does not divide a.
inline Poly divide_exact(const Poly& a, const Poly& b) {
  DivMod qr = divmod(a, b);
  if (!qr.remainder.is_zero()) {
    throw Error(Errc::kNotADivisor, b.to_string() + " does not divide " + a.to_string());
  }
  return std::move(qr.quotient);
}

inline bool divides(const Poly& d, const Poly& a) { return divmod(a, d).remainder.is_zero(); }

// Monic gcd via Euclid.
inline Poly gcd(const Poly& a, const Poly& b) {
  a.require_same_field(b);
  if (a.is_zero() && b.is_zero()) throw Error(Errc::kBothZero, "gcd(0, 0)");
  Poly r0 = a, r1 = b;
  while (!r1.is_zero()) {
    Poly r2 = r0 % r1;
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return r0.monic();
}

inline Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) throw Error(Errc::kZeroPolynomial, "lcm with a zero argument");
  return divide_exact(a * b, gcd(a, b)).monic();
}

inline Poly gcd(std::span<const Poly> polys) {
  if (polys.empty()) throw Error(Errc::kInvalidArgument, "gcd of an empty list");
  Poly acc = polys[0];
  for (std::size_t i = 1; i < polys.size(); ++i) {
    if (!(acc.is_zero() && polys[i].is_zero())) acc = gcd(acc, polys[i]);
  }
  if (acc.is_zero()) throw Error(Errc::kBothZero, "gcd of zero polynomials");
  return acc.monic();
}

inline Poly lcm(std::span<const Poly> polys) {
  if (polys.empty()) throw Error(Errc::kInvalidArgument, "lcm of an empty list");
  Poly acc = polys[0].monic();
  if (acc.is_zero()) throw Error(Errc::kZeroPolynomial, "lcm with a zero argument");
  for (std::size_t i = 1; i < polys.size(); ++i) acc = lcm(acc, polys[i]);
  return acc;
}

struct ExtGcd {
  Poly d;  // monic gcd
  Poly s;
  Poly t;  // s*a + t*b = d
};

inline ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  a.require_same_field(b);
  if (a.is_zero() && b.is_zero()) throw Error(Errc::kBothZero, "ext_gcd(0, 0)");
  const Field& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f, Field::one()), s1(f);
  Poly t0(f), t1 = Poly::constant(f, Field::one());
  while (!r1.is_zero()) {
    DivMod qr = divmod(r0, r1);
    Poly s2 = s0 - qr.quotient * s1;
    Poly t2 = t0 - qr.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const FieldElement inv = f.inv(r0.leading());
  ExtGcd out{r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
  RINGCYCLIC_DCHECK(out.s * a + out.t * b == out.d, "Bezout identity");
  return out;
}

// x^{deg h} h(1/x), made monic. The fault hook drops the normalization.
inline Poly reciprocal(const Poly& h) {
  if (h.is_zero()) throw Error(Errc::kZeroPolynomial, "reciprocal of the zero polynomial");
  std::vector<FieldElement> rev(h.coeffs().rbegin(), h.coeffs().rend());
  Poly out(h.field(), std::move(rev));
  if (detail::fault_active(detail::Fault::kReciprocalSkipsMonic)) return out;
  return out.monic();
}

inline Poly pow_mod(Poly base, std::uint64_t exp, const Poly& modulus) {
  Poly result = Poly::constant(base.field(), Field::one()) % modulus;
  base = base % modulus;
  while (exp != 0) {
    if (exp & 1u) result = (result * base) % modulus;
    exp >>= 1u;
    if (exp != 0) base = (base * base) % modulus;
  }
  return result;
}

// No factor of degree d <= deg/2: gcd(f, x^{q^d} - x) = 1 for every such d.
inline bool is_irreducible(const Poly& f) {
  if (f.is_zero() || *f.degree() == 0) return false;
  if (*f.degree() == 1) return true;
  const Field& field = f.field();
  const Poly x = Poly::monomial(field, Field::one(), 1);
  Poly frob = x;
  for (std::size_t d = 1; d <= *f.degree() / 2; ++d) {
    frob = pow_mod(frob, field.order(), f);
    if (*gcd(f, frob - x).degree() != 0) return false;
  }
  return true;
}

inline void require_coprime_length(const Field& field, std::size_t n) {
  if (n == 0) throw Error(Errc::kInvalidArgument, "code length must be >= 1");
  if (n % field.p() == 0) {
    throw Error(Errc::kNotCoprime, "length " + std::to_string(n) + " is divisible by the characteristic " +
                                       std::to_string(field.p()));
  }
}

// Distinct monic irreducible factors of x^n - 1, sorted by poly_less.
// Trial division by monic candidates of increasing degree; whatever remains
// once 2d exceeds its degree is irreducible.
inline std::vector<Poly> factor_xn_minus_1(const Field& field, std::size_t n,
                                           EnumerationLimit limit = EnumerationLimit{}) {
  require_coprime_length(field, n);
  Poly rest = Poly::x_to_n_minus_one(field, n);
  std::vector<Poly> factors;
  const std::vector<FieldElement> elements = field.enumerate();
  for (std::size_t d = 1; *rest.degree() >= 1; ++d) {
    if (2 * d > *rest.degree()) {
      factors.push_back(rest.monic());
      break;
    }
    detail::bounded_pow(field.order(), d, limit, "factor candidates");
    std::vector<std::size_t> digits(d, 0);
    for (;;) {
      std::vector<FieldElement> coeffs(d + 1);
      for (std::size_t i = 0; i < d; ++i) coeffs[i] = elements[digits[i]];
      coeffs[d] = Field::one();
      Poly candidate(field, std::move(coeffs));
      DivMod qr = divmod(rest, candidate);
      if (qr.remainder.is_zero()) {
        factors.push_back(std::move(candidate));
        rest = std::move(qr.quotient);
        if (2 * d > *rest.degree()) break;
      }
      std::size_t i = 0;
      while (i < d && ++digits[i] == elements.size()) digits[i++] = 0;
      if (i == d) break;
    }
  }
  std::sort(factors.begin(), factors.end(), poly_less);
  return factors;
}

// All 2^m monic divisors of x^n - 1 (m irreducible factors), sorted.
inline std::vector<Poly> divisors_of_xn_minus_1(const Field& field, std::size_t n,
                                                EnumerationLimit limit = EnumerationLimit{}) {
  const std::vector<Poly> factors = factor_xn_minus_1(field, n, limit);
  detail::bounded_pow(2, factors.size(), limit, "divisor enumeration");
  std::vector<Poly> out;
  const std::uint64_t count = std::uint64_t{1} << factors.size();
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Poly prod = Poly::constant(field, Field::one());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (mask & (std::uint64_t{1} << i)) prod = prod * factors[i];
    }
    out.push_back(std::move(prod));
  }
  std::sort(out.begin(), out.end(), poly_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Element of F_{p^k}[x]/(x^n - 1), kept reduced (degree < n).
class QuotientElement {
 public:
  QuotientElement(const Poly& poly, std::size_t n) : n_(n), poly_(reduce(poly, n)) {}

  static QuotientElement from_word(const Field& field, std::span<const FieldElement> word) {
    return QuotientElement(Poly(field, std::vector<FieldElement>(word.begin(), word.end())), word.size());
  }

  static QuotientElement zero(const Field& field, std::size_t n) { return QuotientElement(Poly(field), n); }
  static QuotientElement one(const Field& field, std::size_t n) {
    return QuotientElement(Poly::constant(field, Field::one()), n);
  }

  std::size_t n() const noexcept { return n_; }
  const Poly& poly() const noexcept { return poly_; }
  const Field& field() const noexcept { return poly_.field(); }
  bool is_zero() const noexcept { return poly_.is_zero(); }

  // Dense coefficient vector of length n.
  std::vector<FieldElement> coefficients() const {
    std::vector<FieldElement> out(n_, Field::zero());
    for (std::size_t i = 0; i < poly_.coeffs().size(); ++i) out[i] = poly_.coeffs()[i];
    return out;
  }

  bool is_idempotent() const { return *this * *this == *this; }

  // Substitutes x -> x^{n-1}: coefficient j moves to (n - j) mod n.
  QuotientElement eval_at_x_inverse() const {
    std::vector<FieldElement> out(n_, Field::zero());
    for (std::size_t j = 0; j < poly_.coeffs().size(); ++j) out[(n_ - j) % n_] = poly_.coeffs()[j];
    return QuotientElement(Poly(field(), std::move(out)), n_);
  }

  friend QuotientElement operator+(const QuotientElement& a, const QuotientElement& b) {
    a.require_same(b);
    return QuotientElement(a.poly_ + b.poly_, a.n_);
  }
  friend QuotientElement operator-(const QuotientElement& a, const QuotientElement& b) {
    a.require_same(b);
    return QuotientElement(a.poly_ - b.poly_, a.n_);
  }
  friend QuotientElement operator*(const QuotientElement& a, const QuotientElement& b) {
    a.require_same(b);
    return QuotientElement(a.poly_ * b.poly_, a.n_);
  }
  friend bool operator==(const QuotientElement& a, const QuotientElement& b) noexcept {
    return a.n_ == b.n_ && a.poly_ == b.poly_;
  }

  std::string to_string() const { return poly_.to_string(); }

 private:
  static Poly reduce(const Poly& poly, std::size_t n) {
    if (n == 0) throw Error(Errc::kInvalidArgument, "quotient length must be >= 1");
    if (poly.coeffs().size() <= n) return poly;
    const Field& f = poly.field();
    std::vector<FieldElement> out(n, Field::zero());
    for (std::size_t i = 0; i < poly.coeffs().size(); ++i) out[i % n] = f.add(out[i % n], poly.coeffs()[i]);
    return Poly(f, std::move(out));
  }

  void require_same(const QuotientElement& other) const {
    if (n_ != other.n_) throw Error(Errc::kMixedParameters, "quotient elements of different lengths");
    poly_.require_same_field(other.poly_);
  }

  std::size_t n_;
  Poly poly_;
};

}  // namespace ringcyclic
