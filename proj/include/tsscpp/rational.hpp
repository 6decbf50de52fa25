// Copyright 2026 The TSSCPP Dimers Authors.
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

#ifndef TSSCPP_RATIONAL_HPP_
#define TSSCPP_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "tsscpp/error.hpp"

namespace tsscpp {

using BigInt = mpz_class;

// Exact rational number, always held in canonical form: gcd(|num|, den) = 1,
// den > 0, and zero is 0/1.
class Rational {
 public:
  Rational() = default;
  template <std::signed_integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT
  template <std::unsigned_integral T>
  Rational(T value) : value_(static_cast<unsigned long>(value)) {}  // NOLINT
  Rational(const BigInt& value) : value_(value) {}  // NOLINT(runtime/explicit)
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
      throw Error(ErrorCode::kInvalidParameter, "zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }

  // Accepts "p/q" or "p" with an optional leading '-'.
  static Rational Parse(std::string_view text) {
    auto valid_integer = [](std::string_view s, bool allow_sign) {
      if (s.empty()) return false;
      std::size_t start = 0;
      if (allow_sign && (s[0] == '-' || s[0] == '+')) start = 1;
      if (start == s.size()) return false;
      for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
      }
      return true;
    };
    const std::size_t slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den =
        slash == std::string_view::npos ? "1" : text.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false)) {
      throw Error(ErrorCode::kInvalidParameter,
                  "malformed rational '" + std::string(text) + "'");
    }
    std::string num_str(num);
    if (num_str[0] == '+') num_str.erase(0, 1);
    return Rational(BigInt(num_str), BigInt(std::string(den)));
  }

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  double ToDouble() const { return value_.get_d(); }
  const mpq_class& raw() const { return value_; }

  Rational abs() const {
    Rational r;
    r.value_ = ::abs(value_);
    return r;
  }

  // Canonical "p/q" form; integers keep the "/1".
  std::string ToString() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  Rational operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
  }
  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorCode::kInvalidParameter, "division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.ToString();
  }

 private:
  mpq_class value_{0};
};

// (-1)^k for any integer k.
inline int SignPower(long long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace tsscpp

#endif  // TSSCPP_RATIONAL_HPP_
