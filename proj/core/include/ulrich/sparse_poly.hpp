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

#ifndef ULRICH_SPARSE_POLY_HPP
#define ULRICH_SPARSE_POLY_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ulrich/rational.hpp"

namespace ulrich {

inline constexpr std::size_t kMaxVars = 16;
inline constexpr unsigned kMaxExponent = 255;

/// Exponent vector over x_1..x_n, n <= kMaxVars.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(std::span<const unsigned> exponents);

  std::size_t nvars() const noexcept { return nvars_; }
  unsigned degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  std::vector<unsigned> exponents() const;

  /// Variables appearing with a positive exponent.
  std::size_t support_size() const noexcept;

  Monomial operator*(const Monomial& o) const;

  // Graded lexicographic: total degree first, then x_1 > x_2 > ... .
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const noexcept;

 private:
  std::array<std::uint8_t, kMaxVars> exps_{};
  std::uint8_t nvars_ = 0;
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Sparse polynomial in Q[x_1..x_n] in canonical form: terms sorted in
/// descending graded-lex order, no zero coefficients.
class SparsePoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  SparsePoly() = default;
  explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {}

  static SparsePoly constant(std::size_t nvars, const Rational& c);
  static SparsePoly variable(std::size_t nvars, std::size_t index);
  /// Sum of `terms`; duplicates are combined and zeros dropped.
  static SparsePoly from_terms(std::size_t nvars, std::vector<Term> terms);
  /// Adopts terms already in canonical order; throws UsageError otherwise.
  static SparsePoly from_canonical_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  unsigned degree() const noexcept;

  /// Coefficient of `m` (zero when absent).
  Rational coeff(const Monomial& m) const;

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }
  SparsePoly& operator*=(const Rational& c);

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
  friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }
  friend SparsePoly operator-(SparsePoly a);

  SparsePoly& operator+=(const Rational& c) { return *this += constant(nvars_, c); }
  SparsePoly& operator-=(const Rational& c) { return *this -= constant(nvars_, c); }
  friend SparsePoly operator+(SparsePoly a, const Rational& c) { return a += c; }
  friend SparsePoly operator-(SparsePoly a, const Rational& c) { return a -= c; }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) = default;

  /// Exact value at `point` (length must equal nvars()).
  Rational eval(std::span<const Rational> point) const;

  /// Polynomial in `target_nvars` variables obtained by sending x_i to
  /// x_{mapping[i]}; distinct sources may share a target.
  SparsePoly rename(std::span<const std::size_t> mapping, std::size_t target_nvars) const;

  /// Human-readable form, e.g. "1/2*x1^2 - x2 + 3".
  std::string to_string() const;

 private:
  void require_same_nvars(const SparsePoly& o, const char* op) const;

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

SparsePoly pow(const SparsePoly& base, unsigned exponent);

/// Accumulates scaled terms in a hash table; `take` yields a canonical poly.
class PolyAccumulator {
 public:
  explicit PolyAccumulator(std::size_t nvars);
  void add(const Monomial& m, const Rational& c);
  void add(const SparsePoly& p);
  void add_scaled(const SparsePoly& p, const Rational& c);
  /// Adds c * p with x_i renamed to x_{mapping[i]} (see SparsePoly::rename).
  void add_renamed(const SparsePoly& p, std::span<const std::size_t> mapping, const Rational& c);
  void add_product(const SparsePoly& a, const SparsePoly& b);
  SparsePoly take();

 private:
  std::size_t nvars_;
  std::unordered_map<Monomial, Rational, MonomialHash> table_;
};

}  // namespace ulrich

#endif  // ULRICH_SPARSE_POLY_HPP
