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

#ifndef ULRICH_EULER_HPP
#define ULRICH_EULER_HPP

#include <cstddef>
#include <vector>

#include "ulrich/rational.hpp"
#include "ulrich/sparse_poly.hpp"

namespace ulrich {

/// Numerical data of an m-dimensional complete intersection of type
/// (d_1..d_s) in P^{m+s}, together with the Veronese twist a and the rank r
/// of the bundle under study.
class ChiProfile {
 public:
  ChiProfile(long m, std::vector<long> degrees, long a, long r);

  long m() const noexcept { return m_; }
  std::size_t s() const noexcept { return degrees_.size(); }
  const std::vector<long>& degrees() const noexcept { return degrees_; }
  long a() const noexcept { return a_; }
  long r() const noexcept { return r_; }

  /// d = prod d_i, S = sum d_i, S' = sum_{i<j} d_i d_j (0 when s = 1).
  const Integer& d() const noexcept { return d_; }
  const Integer& S() const noexcept { return S_; }
  const Integer& S_prime() const noexcept { return S_prime_; }

  friend bool operator==(const ChiProfile& a, const ChiProfile& b) {
    return a.m_ == b.m_ && a.degrees_ == b.degrees_ && a.a_ == b.a_ && a.r_ == b.r_;
  }

 private:
  long m_;
  std::vector<long> degrees_;
  long a_;
  long r_;
  Integer d_;
  Integer S_;
  Integer S_prime_;
};

inline constexpr std::size_t kMaxKoszulDegrees = 24;

/// chi(O_{P^m}(l)) = binom(l+m, m).
Rational chi_proj(const Rational& ell, long m);

/// chi(O_X(l)) by inclusion-exclusion over the Koszul resolution of X in
/// P^{m+s}. The twist may be rational (u is not always integral).
Rational chi_ci(const Rational& ell, const ChiProfile& profile);

/// chi(E(l)) = (r d / m!) (l + a)(l + 2a)...(l + m a) for a rank r Ulrich
/// bundle with respect to O_X(a).
Rational chi_ulrich(const Rational& ell, const ChiProfile& profile);

/// chi(O_Z(l)) from the closed Koszul display with c_1(E) = uH.
Rational chi_Z(const Rational& ell, const ChiProfile& profile, const Rational& u);

/// Same quantity via chi(O_X(l)) - chi(E(l-u)) + (r-1) chi(O_X(l-u)).
Rational chi_Z_three_term(const Rational& ell, const ChiProfile& profile, const Rational& u);

/// u(x) = (r/2)[(m+1)(a-1) + x_1 + ... + x_s - s] as a polynomial in s variables.
SparsePoly u_poly(long a, long m, std::size_t s, long r);

/// The symmetric polynomial f_{a,m,s,r,l}(x_1..x_s) whose value at a degree
/// tuple is chi(O_Z(l)), fully expanded.
SparsePoly build_f(long a, long m, std::size_t s, long r, long ell);

}  // namespace ulrich

#endif  // ULRICH_EULER_HPP
