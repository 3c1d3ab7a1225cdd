// Copyright 2026 The ulrich Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ULRICH_RATIONAL_HPP
#define ULRICH_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ulrich {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : value_(value) {}  // NOLINT
  Rational(long num, long den);
  Rational(const Integer& num, const Integer& den);
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Parses "p" or "p/q" (optional leading '-', no whitespace).
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  const mpq_class& raw() const noexcept { return value_; }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_integer() const noexcept { return mpz_cmp_ui(value_.get_den_mpz_t(), 1) == 0; }
  int sign() const noexcept { return sgn(value_); }
  double to_double() const { return value_.get_d(); }

  /// "p/q", or "p" when q = 1.
  std::string to_string() const;

  Rational& operator+=(const Rational& o) { mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), o.value_.get_mpq_t()); return *this; }
  Rational& operator-=(const Rational& o) { mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), o.value_.get_mpq_t()); return *this; }
  Rational& operator*=(const Rational& o) { mpq_mul(value_.get_mpq_t(), value_.get_mpq_t(), o.value_.get_mpq_t()); return *this; }
  Rational& operator/=(const Rational& o);

  /// this += a * b, without a temporary for the product when possible.
  void add_product(const Rational& a, const Rational& b);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(Rational a) { mpq_neg(a.value_.get_mpq_t(), a.value_.get_mpq_t()); return a; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q);

 private:
  mpq_class value_;
};

Rational pow(const Rational& base, unsigned exponent);

/// n! as an exact integer.
Integer factorial(unsigned n);

}  // namespace ulrich

#endif  // ULRICH_RATIONAL_HPP
