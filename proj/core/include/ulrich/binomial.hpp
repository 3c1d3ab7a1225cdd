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

#ifndef ULRICH_BINOMIAL_HPP
#define ULRICH_BINOMIAL_HPP

#include <vector>

#include "ulrich/rational.hpp"
#include "ulrich/sparse_poly.hpp"

namespace ulrich {

// Generalized binomial coefficients q(q-1)...(q-m+1)/m!, with the empty
// product convention for m = 0. A negative `m` is a usage error.

Rational binom_int(const Integer& q, long m);
Rational binom(const Rational& q, long m);

/// Expanded polynomial P(P-1)...(P-m+1)/m!. Linear arguments are expanded
/// term by term with the multinomial theorem; anything else goes through
/// binom_poly_product.
SparsePoly binom_poly(const SparsePoly& p, long m);

/// Product of the shifted factors, divided by m! once at the end.
SparsePoly binom_poly_product(const SparsePoly& p, long m);

/// Coefficients of binom(t + shift, m) as a polynomial in t, lowest degree first.
std::vector<Rational> binom_univariate(const Rational& shift, long m);

}  // namespace ulrich

#endif  // ULRICH_BINOMIAL_HPP
