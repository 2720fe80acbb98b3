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

#include <cctype>
#include <cstdint>
#include <array>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "ringcyclic/errors.hpp"

namespace ringcyclic::detail {

inline constexpr std::size_t kMaxSymbols = 3;

// Polynomial in up to three symbols with coefficients reduced mod p, keyed by
// the exponent of each symbol in the order they were declared. Used to parse
// field elements (`a`), polynomials in x over F_{p^k}, elements of R_r (`v`)
// and polynomials with R_r coefficients.
using Exponents = std::array<std::uint32_t, kMaxSymbols>;
using MultiPoly = std::map<Exponents, std::uint64_t>;

inline constexpr std::uint32_t kMaxParsedExponent = 1u << 16;

class ExpressionParser {
 public:
  // `symbols` lists the accepted symbol letters, at most three.
  ExpressionParser(std::string_view text, std::string_view symbols,
                   std::uint64_t p)
      : text_(text), symbols_(symbols), p_(p) {
    if (symbols_.size() > kMaxSymbols) fail("too many symbols");
  }

  MultiPoly parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    MultiPoly result = parse_sum();
    skip_space();
    if (!at_end()) fail("unexpected character '" + std::string(1, peek()) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::kParseError, why + " at offset " + std::to_string(pos_) +
                                       " in \"" + std::string(text_) + "\"");
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  MultiPoly parse_sum() {
    MultiPoly acc;
    bool negate = false;
    skip_space();
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    add_into(acc, parse_product(), negate);
    for (;;) {
      skip_space();
      if (peek() != '+' && peek() != '-') break;
      negate = peek() == '-';
      ++pos_;
      add_into(acc, parse_product(), negate);
    }
    return acc;
  }

  bool starts_factor() {
    skip_space();
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' ||
           symbol_index(c) < symbols_.size();
  }

  MultiPoly parse_product() {
    MultiPoly acc = parse_power();
    for (;;) {
      skip_space();
      if (peek() == '*') {
        ++pos_;
        acc = multiply(acc, parse_power());
      } else if (starts_factor()) {
        acc = multiply(acc, parse_power());
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly parse_power() {
    MultiPoly base = parse_primary();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    const std::uint64_t exp = parse_integer();
    if (exp > kMaxParsedExponent) fail("exponent too large");
    MultiPoly result{{Exponents{}, 1 % p_}};
    for (std::uint64_t i = 0; i < exp; ++i) result = multiply(result, base);
    return result;
  }

  MultiPoly parse_primary() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      MultiPoly inside = parse_sum();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inside;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t value = parse_integer() % p_;
      MultiPoly out;
      if (value != 0) out[Exponents{}] = value;
      return out;
    }
    if (const std::size_t idx = symbol_index(c); idx < symbols_.size()) {
      ++pos_;
      Exponents e{};
      e[idx] = 1;
      return MultiPoly{{e, 1 % p_}};
    }
    if (c == '\0') fail("unexpected end of expression");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::uint64_t parse_integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    std::uint64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(peek() - '0');
      if (value > (UINT64_MAX - digit) / 10) fail("integer too large");
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  void add_into(MultiPoly& acc, const MultiPoly& term, bool negate) const {
    for (const auto& [key, coeff] : term) {
      const std::uint64_t c = negate ? (p_ - coeff) % p_ : coeff;
      const std::uint64_t sum = (acc[key] + c) % p_;
      if (sum == 0) {
        acc.erase(key);
      } else {
        acc[key] = sum;
      }
    }
  }

  MultiPoly multiply(const MultiPoly& a, const MultiPoly& b) const {
    MultiPoly out;
    for (const auto& [ka, ca] : a) {
      for (const auto& [kb, cb] : b) {
        Exponents key{};
        for (std::size_t i = 0; i < kMaxSymbols; ++i) {
          const std::uint64_t e = std::uint64_t{ka[i]} + kb[i];
          if (e > kMaxParsedExponent) fail("exponent too large");
          key[i] = static_cast<std::uint32_t>(e);
        }
        const std::uint64_t sum = (out[key] + (ca * cb) % p_) % p_;
        if (sum == 0) {
          out.erase(key);
        } else {
          out[key] = sum;
        }
      }
    }
    return out;
  }

  std::size_t symbol_index(char c) const {
    if (c == '\0') return symbols_.size();
    const std::size_t idx = symbols_.find(c);
    return idx == std::string_view::npos ? symbols_.size() : idx;
  }

  std::string_view text_;
  std::string_view symbols_;
  std::uint64_t p_;
  std::size_t pos_ = 0;
};

inline MultiPoly parse_expression(std::string_view text, std::string_view symbols, std::uint64_t p) {
  return ExpressionParser(text, symbols, p).parse();
}

}  // namespace ringcyclic::detail
