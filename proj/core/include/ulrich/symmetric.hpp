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

#ifndef ULRICH_SYMMETRIC_HPP
#define ULRICH_SYMMETRIC_HPP

#include <cstddef>
#include <map>

#include "ulrich/partition.hpp"
#include "ulrich/rational.hpp"
#include "ulrich/sparse_poly.hpp"

namespace ulrich {

/// A symmetric polynomial in s variables written in the monomial symmetric
/// basis: sum of coeff(lambda) * m_lambda(s).
class BasisExpr {
 public:
  using Map = std::map<Partition, Rational, BasisOrder>;

  BasisExpr() = default;
  explicit BasisExpr(std::size_t nvars) : nvars_(nvars) {}

  std::size_t nvars() const noexcept { return nvars_; }
  const Map& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  Rational coeff(const Partition& p) const;

  /// Adds c * m_lambda. Partitions longer than nvars are dropped since
  /// m_lambda(s) = 0 there.
  void add(const Partition& lambda, const Rational& c);

  BasisExpr& operator+=(const BasisExpr& o);
  BasisExpr& operator-=(const BasisExpr& o);
  BasisExpr& operator*=(const Rational& c);
  friend BasisExpr operator-(BasisExpr a, const BasisExpr& b) { return a -= b; }
  friend BasisExpr operator*(BasisExpr a, const Rational& c) { return a *= c; }

  friend bool operator==(const BasisExpr&, const BasisExpr&) = default;

 private:
  std::size_t nvars_ = 0;
  Map coeffs_;
};

/// m_lambda in `s` variables; zero when lambda has more than s parts.
SparsePoly expand_m(const Partition& lambda, std::size_t s);

/// Number of distinct permutations of lambda padded with zeros to length s.
std::size_t orbit_size(const Partition& lambda, std::size_t s);

/// Rewrites a symmetric polynomial in the monomial basis. Throws
/// SymmetryError when two monomials of one orbit disagree or an orbit is
/// incomplete.
BasisExpr to_basis(const SparsePoly& p);

SparsePoly from_basis(const BasisExpr& b);

/// p / (x_1 ... x_s); DivisibilityError if some term misses a variable.
SparsePoly divide_all_vars(const SparsePoly& p);

/// Sets x_{k+1} = ... = x_s = 1, giving a polynomial in x_1..x_k.
SparsePoly specialize_ones(const SparsePoly& p, std::size_t k);

}  // namespace ulrich

#endif  // ULRICH_SYMMETRIC_HPP
