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
#include <cctype>
#include <charconv>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ringcyclic/detail/expression_parser.hpp"
#include "ringcyclic/errors.hpp"
#include "ringcyclic/limits.hpp"

namespace ringcyclic {

// Element of F_{p^k}. `raw` packs the coefficients (a_0, ..., a_{k-1}) of
// 1, a, ..., a^{k-1} as sum a_i p^i, so 0 and 1 are the field's zero and one
// and, for k = 1, raw is the residue itself. Only meaningful together with the
// Field that produced it.
struct FieldElement {
  std::uint32_t raw = 0;

  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

namespace detail {

// Dense polynomial over F_p, lowest degree first, no trailing zeros.
using IntPoly = std::vector<std::uint32_t>;

inline void trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid on integers.
  std::int64_t r0 = p, r1 = a % p, s0 = 0, s1 = 1;
  if (r1 == 0) throw Error(Errc::kZeroInversion, "inverse of 0 mod " + std::to_string(p));
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
  }
  std::int64_t inv = s0 % static_cast<std::int64_t>(p);
  if (inv < 0) inv += p;
  return static_cast<std::uint32_t>(inv);
}

// a mod m over F_p; m must be nonzero.
inline IntPoly int_poly_mod(IntPoly a, const IntPoly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod_prime(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t c = (a.back() * lead_inv) % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) {
      const std::uint64_t sub = (c * m[j]) % p;
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

inline IntPoly int_poly_mul(const IntPoly& a, const IntPoly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>(
          (out[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  trim(out);
  return out;
}

inline IntPoly int_poly_sub(IntPoly a, const IntPoly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    a[i] = static_cast<std::uint32_t>((a[i] + p - b[i]) % p);
  }
  trim(a);
  return a;
}

// Monic gcd over F_p; both zero gives the empty polynomial.
inline IntPoly int_poly_gcd(IntPoly a, IntPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    IntPoly r = int_poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  const std::uint64_t inv = inv_mod_prime(a.back(), p);
  for (auto& c : a) c = static_cast<std::uint32_t>((c * inv) % p);
  return a;
}

inline IntPoly int_poly_pow_mod(IntPoly base, std::uint64_t exp, const IntPoly& m,
                                std::uint32_t p) {
  IntPoly result = int_poly_mod(IntPoly{1}, m, p);
  base = int_poly_mod(std::move(base), m, p);
  while (exp != 0) {
    if (exp & 1u) result = int_poly_mod(int_poly_mul(result, base, p), m, p);
    exp >>= 1u;
    if (exp != 0) base = int_poly_mod(int_poly_mul(base, base, p), m, p);
  }
  return result;
}

inline std::string int_poly_to_string(const IntPoly& a, char symbol) {
  if (a.empty()) return "0";
  std::string out;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(a[i]);
      continue;
    }
    if (a[i] != 1) out += std::to_string(a[i]) + "*";
    out += symbol;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace detail

// Deterministic trial division.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Irreducibility of a polynomial over F_p: f has no factor of degree
// d <= deg(f)/2, tested as gcd(f, x^{p^d} - x) = 1 for each such d.
inline bool is_irreducible_mod_p(const detail::IntPoly& f, std::uint32_t p) {
  detail::IntPoly g = f;
  detail::trim(g);
  if (g.size() < 2) return false;
  const std::size_t deg = g.size() - 1;
  if (deg == 1) return true;
  const detail::IntPoly x{0, 1};
  detail::IntPoly frob = x;  // x^{p^d} mod f
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    frob = detail::int_poly_pow_mod(frob, p, g, p);
    const detail::IntPoly diff = detail::int_poly_sub(frob, x, p);
    const detail::IntPoly common = detail::int_poly_gcd(g, diff, p);
    if (common.size() != 1) return false;
  }
  return true;
}

// Lexicographically smallest monic irreducible polynomial of degree k over
// F_p, ordering the tuples (a_0, ..., a_{k-1}) ascending with a_0 most
// significant.
inline detail::IntPoly find_irreducible(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw Error(Errc::kInvalidSpec, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(Errc::kInvalidSpec, "extension degree must be >= 1");
  detail::IntPoly candidate(k + 1, 0);
  candidate[k] = 1;
  for (;;) {
    if (is_irreducible_mod_p(candidate, p)) return candidate;
    // Odometer with a_{k-1} as the fastest-moving digit.
    std::size_t i = k;
    for (;;) {
      if (i == 0) throw Error(Errc::kInternal, "no irreducible polynomial found");
      --i;
      if (++candidate[i] < p) break;
      candidate[i] = 0;
    }
  }
}

// The finite field F_{p^k} presented as F_p[a]/(modulus). Immutable and
// cheap to copy; copies share their data.
class Field {
 public:
  static constexpr std::uint32_t kMaxPrime = 65521;
  static constexpr std::uint32_t kMaxExtensionDegree = 16;

  Field(std::uint32_t p, std::uint32_t k) : Field(p, k, default_modulus(p, k)) {}

  Field(std::uint32_t p, std::uint32_t k, detail::IntPoly modulus) {
    if (!is_prime(p)) throw Error(Errc::kInvalidSpec, std::to_string(p) + " is not prime");
    if (p > kMaxPrime) throw Error(Errc::kInvalidSpec, "characteristic too large");
    if (k == 0 || k > kMaxExtensionDegree) {
      throw Error(Errc::kInvalidSpec, "extension degree must be in [1, 16]");
    }
    for (auto& c : modulus) {
      if (c >= p) throw Error(Errc::kInvalidSpec, "modulus coefficient out of range");
    }
    detail::trim(modulus);
    if (modulus.size() != k + 1 || modulus.back() != 1) {
      throw Error(Errc::kInvalidSpec, "modulus must be monic of degree k");
    }
    if (k == 1) {
      if (modulus[0] != 0) {
        throw Error(Errc::kInvalidSpec, "prime fields use the placeholder modulus x");
      }
    } else if (!is_irreducible_mod_p(modulus, p)) {
      throw Error(Errc::kInvalidSpec,
                  "modulus " + detail::int_poly_to_string(modulus, 'x') +
                      " is reducible over F_" + std::to_string(p));
    }
    bool overflow = false;
    const std::uint64_t q = detail::checked_pow(p, k, overflow);
    if (overflow || q > (std::uint64_t{1} << 31)) {
      throw Error(Errc::kInvalidSpec, "field order too large");
    }
    auto data = std::make_shared<Data>();
    data->p = p;
    data->k = k;
    data->q = static_cast<std::uint32_t>(q);
    data->modulus = std::move(modulus);
    data->digit_weight.resize(k, 1);
    for (std::uint32_t i = 1; i < k; ++i) data->digit_weight[i] = data->digit_weight[i - 1] * p;
    data->default_modulus = data->modulus == default_modulus(p, k);
    data_ = std::move(data);
  }

  // Accepts "GF(q)" or "GF(q; modulus)"; q must be a prime power.
  static Field parse(std::string_view text);

  std::uint32_t p() const noexcept { return data_->p; }
  std::uint32_t k() const noexcept { return data_->k; }
  std::uint32_t order() const noexcept { return data_->q; }
  const detail::IntPoly& modulus() const noexcept { return data_->modulus; }
  bool has_default_modulus() const noexcept { return data_->default_modulus; }

  static constexpr FieldElement zero() noexcept { return FieldElement{0}; }
  static constexpr FieldElement one() noexcept { return FieldElement{1}; }

  bool contains(FieldElement a) const noexcept { return a.raw < data_->q; }

  // Image of an integer under Z -> F_p -> F_{p^k}.
  FieldElement from_int(std::int64_t value) const {
    const std::int64_t p = data_->p;
    std::int64_t r = value % p;
    if (r < 0) r += p;
    return FieldElement{static_cast<std::uint32_t>(r)};
  }

  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() > data_->k) {
      throw Error(Errc::kInvalidArgument, "too many coefficients for field element");
    }
    std::uint32_t raw = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] >= data_->p) {
        throw Error(Errc::kInvalidArgument, "coefficient out of range");
      }
      raw += coeffs[i] * data_->digit_weight[i];
    }
    return FieldElement{raw};
  }

  std::vector<std::uint32_t> coeffs(FieldElement a) const {
    std::vector<std::uint32_t> out(data_->k);
    std::uint32_t raw = a.raw;
    for (auto& c : out) {
      c = raw % data_->p;
      raw /= data_->p;
    }
    return out;
  }

  FieldElement add(FieldElement a, FieldElement b) const noexcept {
    if (data_->k == 1) return FieldElement{(a.raw + b.raw) % data_->p};
    return add_general(a, b);
  }

  FieldElement neg(FieldElement a) const noexcept {
    if (data_->k == 1) return FieldElement{(data_->p - a.raw) % data_->p};
    const std::uint32_t p = data_->p;
    std::uint32_t raw = a.raw, out = 0;
    for (std::uint32_t i = 0; i < data_->k; ++i) {
      const std::uint32_t d = raw % p;
      raw /= p;
      out += ((p - d) % p) * data_->digit_weight[i];
    }
    return FieldElement{out};
  }

  FieldElement sub(FieldElement a, FieldElement b) const noexcept { return add(a, neg(b)); }

  FieldElement mul(FieldElement a, FieldElement b) const noexcept {
    if (data_->k == 1) {
      return FieldElement{static_cast<std::uint32_t>(
          (std::uint64_t{a.raw} * b.raw) % data_->p)};
    }
    return mul_general(a, b);
  }

  // Digit-wise addition and reduction by the modulus, used for every k. The
  // k = 1 fast paths above must agree with these bit for bit.
  FieldElement add_general(FieldElement a, FieldElement b) const noexcept {
    const std::uint32_t p = data_->p;
    std::uint32_t ra = a.raw, rb = b.raw, out = 0;
    for (std::uint32_t i = 0; i < data_->k; ++i) {
      const std::uint32_t d = (ra % p + rb % p) % p;
      ra /= p;
      rb /= p;
      out += d * data_->digit_weight[i];
    }
    return FieldElement{out};
  }

  FieldElement mul_general(FieldElement a, FieldElement b) const noexcept {
    const std::uint32_t p = data_->p;
    const std::uint32_t k = data_->k;
    std::uint64_t da[kMaxExtensionDegree] = {};
    std::uint64_t db[kMaxExtensionDegree] = {};
    std::uint64_t prod[2 * kMaxExtensionDegree] = {};
    std::uint32_t ra = a.raw, rb = b.raw;
    for (std::uint32_t i = 0; i < k; ++i) {
      da[i] = ra % p;
      db[i] = rb % p;
      ra /= p;
      rb /= p;
    }
    for (std::uint32_t i = 0; i < k; ++i) {
      if (da[i] == 0) continue;
      for (std::uint32_t j = 0; j < k; ++j) {
        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      }
    }
    const auto& m = data_->modulus;
    for (std::uint32_t i = 2 * k - 1; i-- > k;) {
      const std::uint64_t c = prod[i];
      if (c == 0) continue;
      prod[i] = 0;
      // a^i = a^{i-k} * a^k and a^k = -(m_0 + ... + m_{k-1} a^{k-1}).
      for (std::uint32_t j = 0; j < k; ++j) {
        prod[i - k + j] = (prod[i - k + j] + (p - (c * m[j]) % p)) % p;
      }
    }
    if (k == 1) {
      // The placeholder modulus x maps a^1 to 0 but there is no a^1 term.
      return FieldElement{static_cast<std::uint32_t>(prod[0])};
    }
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
      out += static_cast<std::uint32_t>(prod[i]) * data_->digit_weight[i];
    }
    return FieldElement{out};
  }

  FieldElement pow(FieldElement a, std::uint64_t exp) const noexcept {
    FieldElement result = one();
    while (exp != 0) {
      if (exp & 1u) result = mul(result, a);
      exp >>= 1u;
      if (exp != 0) a = mul(a, a);
    }
    return result;
  }

  // Extended Euclid for prime fields, Fermat a^{q-2} for extensions.
  FieldElement inv(FieldElement a) const {
    if (a.raw == 0) throw Error(Errc::kZeroInversion, "inverse of zero in " + description());
    if (data_->k == 1) return FieldElement{detail::inv_mod_prime(a.raw, data_->p)};
    return pow(a, std::uint64_t{data_->q} - 2);
  }

  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  // Lexicographic order on (a_0, ..., a_{k-1}), a_0 most significant.
  bool lex_less(FieldElement a, FieldElement b) const noexcept {
    const std::uint32_t p = data_->p;
    std::uint32_t ra = a.raw, rb = b.raw;
    for (std::uint32_t i = 0; i < data_->k; ++i) {
      const std::uint32_t da = ra % p, db = rb % p;
      if (da != db) return da < db;
      ra /= p;
      rb /= p;
    }
    return false;
  }

  // All p^k elements in lexicographic coefficient order.
  std::vector<FieldElement> enumerate(
      EnumerationLimit limit = EnumerationLimit{kFieldEnumerationLimit}) const {
    limit.require(data_->q, "field enumeration");
    std::vector<FieldElement> out;
    out.reserve(data_->q);
    std::vector<std::uint32_t> digits(data_->k, 0);
    for (std::uint32_t n = 0; n < data_->q; ++n) {
      out.push_back(from_coeffs(digits));
      for (std::size_t i = data_->k; i-- > 0;) {
        if (++digits[i] < data_->p) break;
        digits[i] = 0;
      }
    }
    return out;
  }

  // k = 1: decimal residue. Otherwise a polynomial in `a`, e.g. "2*a+1".
  std::string to_string(FieldElement a) const {
    if (data_->k == 1) return std::to_string(a.raw);
    detail::IntPoly c = coeffs(a);
    detail::trim(c);
    return detail::int_poly_to_string(c, 'a');
  }

  FieldElement parse_element(std::string_view text) const {
    const detail::MultiPoly parsed = detail::parse_expression(text, data_->k == 1 ? "" : "a", data_->p);
    return from_parsed(parsed, text);
  }

  // Converts a parsed polynomial in the field generator (outer exponents)
  // into a field element, reducing by the modulus.
  FieldElement from_generator_powers(const std::vector<std::uint64_t>& coeffs) const {
    detail::IntPoly poly(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      poly[i] = static_cast<std::uint32_t>(coeffs[i] % data_->p);
    }
    if (data_->k == 1) {
      detail::trim(poly);
      if (poly.size() > 1) throw Error(Errc::kParseError, "generator symbol used in prime field");
      return FieldElement{poly.empty() ? 0 : poly[0]};
    }
    poly = detail::int_poly_mod(std::move(poly), data_->modulus, data_->p);
    return from_coeffs(poly);
  }

  // "GF(3)" for prime fields, "GF(9; x^2+1)" for extensions.
  std::string description() const {
    if (data_->k == 1) return "GF(" + std::to_string(data_->p) + ")";
    return "GF(" + std::to_string(data_->q) + "; " +
           detail::int_poly_to_string(data_->modulus, 'x') + ")";
  }

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.data_ == b.data_ ||
           (a.data_->p == b.data_->p && a.data_->k == b.data_->k &&
            a.data_->modulus == b.data_->modulus);
  }

 private:
  struct Data {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::uint32_t q = 0;
    detail::IntPoly modulus;
    std::vector<std::uint32_t> digit_weight;
    bool default_modulus = true;
  };

  static detail::IntPoly default_modulus(std::uint32_t p, std::uint32_t k) {
    if (k == 1) return detail::IntPoly{0, 1};
    return find_irreducible(p, k);
  }

  FieldElement from_parsed(const detail::MultiPoly& parsed, std::string_view text) const {
    std::vector<std::uint64_t> coeffs;
    for (const auto& [key, c] : parsed) {
      if (key[1] != 0 || key[2] != 0) throw Error(Errc::kParseError, "bad field element: " + std::string(text));
      if (coeffs.size() <= key[0]) coeffs.resize(key[0] + 1, 0);
      coeffs[key[0]] = c;
    }
    return from_generator_powers(coeffs);
  }

  std::shared_ptr<const Data> data_;
};

namespace detail {

inline std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  s = strip(s);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(Errc::kParseError, "expected unsigned integer for " + std::string(what) +
                                       ", got \"" + std::string(s) + "\"");
  }
  return value;
}

// Splits q = p^k; throws if q is not a prime power.
inline std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint64_t q) {
  if (q < 2) throw Error(Errc::kInvalidSpec, "field order must be >= 2");
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  std::uint32_t k = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw Error(Errc::kInvalidSpec, std::to_string(q) + " is not a prime power");
  return {static_cast<std::uint32_t>(p), k};
}

inline IntPoly parse_int_poly(std::string_view text, std::uint32_t p) {
  const MultiPoly parsed = parse_expression(text, "x", p);
  IntPoly out;
  for (const auto& [key, c] : parsed) {
    if (out.size() <= key[0]) out.resize(key[0] + 1, 0);
    out[key[0]] = static_cast<std::uint32_t>(c);
  }
  trim(out);
  return out;
}

// Parses "q" or "q; modulus" into a field.
inline Field field_from_order_and_modulus(std::string_view order_text,
                                          std::string_view modulus_text) {
  const auto [p, k] = split_prime_power(parse_uint(order_text, "field order"));
  if (strip(modulus_text).empty()) return Field(p, k);
  return Field(p, k, parse_int_poly(modulus_text, p));
}

}  // namespace detail

inline Field Field::parse(std::string_view text) {
  std::string_view s = detail::strip(text);
  if (s.substr(0, 3) != "GF(" || s.back() != ')') {
    throw Error(Errc::kParseError, "expected GF(q) or GF(q; modulus), got \"" + std::string(text) + "\"");
  }
  s = s.substr(3, s.size() - 4);
  const auto semi = s.find(';');
  if (semi == std::string_view::npos) return detail::field_from_order_and_modulus(s, "");
  return detail::field_from_order_and_modulus(s.substr(0, semi), s.substr(semi + 1));
}

}  // namespace ringcyclic
