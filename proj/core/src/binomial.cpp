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

#include "ulrich/binomial.hpp"

#include "ulrich/errors.hpp"

namespace ulrich {

namespace {

void require_order(long m) {
  if (m < 0) throw UsageError("binomial order must be non-negative, got " + std::to_string(m));
}

}  // namespace

Rational binom_int(const Integer& q, long m) {
  require_order(m);
  if (q >= 0) {
    Integer out;
    mpz_bin_ui(out.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(m));
    return Rational(out);
  }
  // binom(-l, m) = (-1)^m binom(l + m - 1, m)
  Integer out;
  const Integer shifted = -q + m - 1;
  mpz_bin_ui(out.get_mpz_t(), shifted.get_mpz_t(), static_cast<unsigned long>(m));
  if (m % 2 != 0) out = -out;
  return Rational(out);
}

Rational binom(const Rational& q, long m) {
  require_order(m);
  if (q.is_integer()) return binom_int(q.numerator(), m);
  Rational num(1);
  for (long j = 0; j < m; ++j) num *= q - Rational(j);
  return num / Rational(factorial(static_cast<unsigned>(m)));
}

SparsePoly binom_poly_product(const SparsePoly& p, long m) {
  require_order(m);
  SparsePoly out = SparsePoly::constant(p.nvars(), Rational(1));
  for (long j = 0; j < m; ++j) out = out * (p - Rational(j));
  return out * Rational(Integer(1), factorial(static_cast<unsigned>(m)));
}

std::vector<Rational> binom_univariate(const Rational& shift, long m) {
  require_order(m);
  std::vector<Rational> coeffs{Rational(1)};
  for (long j = 0; j < m; ++j) {
    const Rational c = shift - Rational(j);
    std::vector<Rational> next(coeffs.size() + 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i].add_product(coeffs[i], c);
    }
    coeffs = std::move(next);
  }
  const Rational inv(Integer(1), factorial(static_cast<unsigned>(m)));
  for (auto& c : coeffs) c *= inv;
  return coeffs;
}

namespace {

// binom(c_0 + sum c_i x_i, m) = sum_j beta_j (sum c_i x_i)^j, and the
// coefficient of x^g in the j-th power is j!/g! prod c_i^{g_i}. With the
// slopes written as n_i / D, the multinomial part is an integer and the
// rational factor beta_j / D^j depends on the degree only.
SparsePoly binom_linear(const SparsePoly& p, long m) {
  const std::size_t n = p.nvars();
  Rational shift(0);
  std::vector<std::size_t> vars;
  std::vector<Rational> slopes;
  for (const auto& [mono, c] : p.terms()) {
    if (mono.degree() == 0) {
      shift = c;
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (mono[i] == 1) {
        vars.push_back(i);
        slopes.push_back(c);
      }
    }
  }
  // Terms come out in descending monomial order when variables are visited
  // in increasing index order.
  const std::vector<Rational> beta = binom_univariate(shift, m);
  const auto max_degree = static_cast<unsigned>(m);

  Integer den(1);
  for (const auto& c : slopes) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.raw().get_den_mpz_t());
  std::vector<std::vector<Integer>> slope_powers(vars.size());
  for (std::size_t v = 0; v < vars.size(); ++v) {
    const Integer numer = slopes[v].numerator() * (den / slopes[v].denominator());
    slope_powers[v].push_back(Integer(1));
    for (unsigned e = 1; e <= max_degree; ++e) slope_powers[v].push_back(slope_powers[v].back() * numer);
  }
  std::vector<std::vector<Integer>> choose(max_degree + 1, std::vector<Integer>(max_degree + 1));
  for (unsigned a = 0; a <= max_degree; ++a) {
    for (unsigned b = 0; b <= a; ++b) mpz_bin_uiui(choose[a][b].get_mpz_t(), a, b);
  }
  std::vector<Rational> per_degree(max_degree + 1);
  {
    Rational den_power(1);
    for (unsigned j = 0; j <= max_degree; ++j) {
      per_degree[j] = beta[j] / den_power;
      den_power *= Rational(den);
    }
  }

  std::vector<SparsePoly::Term> terms;
  Monomial current(n);
  // partial[v] = (g_0 + ... + g_{v-1})! / (g_0! ... g_{v-1}!) * prod n_u^{g_u}
  std::vector<Integer> partial(vars.size() + 1);
  partial[0] = 1;
  auto rec = [&](auto&& self, std::size_t v, unsigned used, unsigned remaining, unsigned total) -> void {
    if (v == vars.size()) {
      if (remaining != 0) return;
      Rational coeff(partial[v]);
      coeff *= per_degree[total];
      if (!coeff.is_zero()) terms.emplace_back(current, std::move(coeff));
      return;
    }
    const bool last = v + 1 == vars.size();
    for (unsigned e = remaining + 1; e-- > 0;) {
      if (last && e != remaining) break;
      current.set(vars[v], e);
      mpz_mul(partial[v + 1].get_mpz_t(), partial[v].get_mpz_t(), choose[used + e][e].get_mpz_t());
      mpz_mul(partial[v + 1].get_mpz_t(), partial[v + 1].get_mpz_t(), slope_powers[v][e].get_mpz_t());
      self(self, v + 1, used + e, remaining - e, total);
    }
    current.set(vars[v], 0);
  };
  for (unsigned j = max_degree + 1; j-- > 0;) {
    if (vars.empty() && j > 0) continue;
    rec(rec, 0, 0, j, j);
  }
  return SparsePoly::from_canonical_terms(n, std::move(terms));
}

}  // namespace

SparsePoly binom_poly(const SparsePoly& p, long m) {
  require_order(m);
  if (p.degree() <= 1) return binom_linear(p, m);
  return binom_poly_product(p, m);
}

}  // namespace ulrich
