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

#include "ulrich/rational.hpp"

#include <ostream>

#include "ulrich/errors.hpp"

namespace ulrich {

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw UsageError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view digits) {
    std::string_view body = digits;
    if (!body.empty() && body.front() == '-') body.remove_prefix(1);
    if (body.empty()) throw UsageError("malformed rational: '" + std::string(text) + "'");
    for (char c : body) {
      if (c < '0' || c > '9') throw UsageError("malformed rational: '" + std::string(text) + "'");
    }
    return Integer(std::string(digits));
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const Integer den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw UsageError("rational denominator must be positive: '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw UsageError("division by zero");
  mpq_div(value_.get_mpq_t(), value_.get_mpq_t(), o.value_.get_mpq_t());
  return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
  if (a.is_integer() && b.is_integer() && is_integer()) {
    // Stays on the integer fast path; canonical form needs no gcd here.
    mpz_addmul(mpq_numref(value_.get_mpq_t()), mpq_numref(a.value_.get_mpq_t()),
               mpq_numref(b.value_.get_mpq_t()));
    return;
  }
  *this += a * b;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

Rational pow(const Rational& base, unsigned exponent) {
  mpq_class out;
  mpz_pow_ui(out.get_num_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(out);
}

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace ulrich
