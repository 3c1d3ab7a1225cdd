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

#include "ulrich/euler.hpp"

#include <bit>
#include <cstdint>

#include "ulrich/binomial.hpp"
#include "ulrich/errors.hpp"

namespace ulrich {

ChiProfile::ChiProfile(long m, std::vector<long> degrees, long a, long r)
    : m_(m), degrees_(std::move(degrees)), a_(a), r_(r), d_(1), S_(0), S_prime_(0) {
  if (m_ < 0) throw UsageError("dimension m must be non-negative");
  if (degrees_.empty()) throw UsageError("at least one degree is required");
  for (long di : degrees_) {
    if (di < 1) throw UsageError("degrees must be >= 1, got " + std::to_string(di));
  }
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    d_ *= degrees_[i];
    S_ += degrees_[i];
    for (std::size_t j = i + 1; j < degrees_.size(); ++j) S_prime_ += Integer(degrees_[i]) * degrees_[j];
  }
}

namespace {

long sign_of(long exponent) { return exponent % 2 == 0 ? 1 : -1; }

/// (-1)^{|T|} over subsets T of the degrees, with `term(sum_T d_i)`.
template <typename F>
Rational koszul_sum(const ChiProfile& profile, F&& term) {
  const std::size_t s = profile.s();
  if (s > kMaxKoszulDegrees) {
    throw UsageError("Koszul sums support at most " + std::to_string(kMaxKoszulDegrees) + " degrees");
  }
  Rational total(0);
  for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
    long sum = 0;
    for (std::size_t i = 0; i < s; ++i) {
      if (mask & (1u << i)) sum += profile.degrees()[i];
    }
    Rational value = term(sum);
    if (std::popcount(mask) % 2 != 0) value = -value;
    total += value;
  }
  return total;
}

}  // namespace

Rational chi_proj(const Rational& ell, long m) {
  if (m < 0) throw UsageError("chi_proj needs m >= 0");
  return binom(ell + Rational(m), m);
}

Rational chi_ci(const Rational& ell, const ChiProfile& profile) {
  const long ambient = profile.m() + static_cast<long>(profile.s());
  return koszul_sum(profile, [&](long sum) { return binom(ell - Rational(sum) + Rational(ambient), ambient); });
}

Rational chi_ulrich(const Rational& ell, const ChiProfile& profile) {
  Rational value = Rational(profile.r()) * Rational(profile.d()) /
                   Rational(factorial(static_cast<unsigned>(profile.m())));
  for (long j = 1; j <= profile.m(); ++j) value *= ell + Rational(j * profile.a());
  return value;
}

Rational chi_Z(const Rational& ell, const ChiProfile& profile, const Rational& u) {
  const long m = profile.m();
  const long s = static_cast<long>(profile.s());
  const long n = m + s;
  const Rational r(profile.r());
  Rational total = binom(ell + Rational(n), n);

  Rational ulrich_part = r * Rational(profile.d()) / Rational(factorial(static_cast<unsigned>(m)));
  for (long j = 1; j <= m; ++j) ulrich_part *= u - ell - Rational(j * profile.a());
  total += Rational(sign_of(m + 1)) * ulrich_part;

  total += Rational(sign_of(m + s)) * (r - Rational(1)) * binom(u - ell - Rational(1), n);

  const std::size_t count = profile.s();
  for (std::uint32_t mask = 1; mask < (1u << count); ++mask) {
    long sum = 0;
    for (std::size_t i = 0; i < count; ++i) {
      if (mask & (1u << i)) sum += profile.degrees()[i];
    }
    const long k = std::popcount(mask);
    Rational bracket = binom(Rational(sum) - ell - Rational(1), n) +
                       (r - Rational(1)) * binom(Rational(sum) + u - ell - Rational(1), n);
    total += Rational(sign_of(k + m + s)) * bracket;
  }
  return total;
}

Rational chi_Z_three_term(const Rational& ell, const ChiProfile& profile, const Rational& u) {
  const Rational shifted = ell - u;
  return chi_ci(ell, profile) - chi_ulrich(shifted, profile) +
         (Rational(profile.r()) - Rational(1)) * chi_ci(shifted, profile);
}

SparsePoly u_poly(long a, long m, std::size_t s, long r) {
  SparsePoly sum = SparsePoly::constant(s, Rational((m + 1) * (a - 1) - static_cast<long>(s)));
  for (std::size_t i = 0; i < s; ++i) sum += SparsePoly::variable(s, i);
  return sum * Rational(r, 2);
}

namespace {

/// Subsets of {0..s-1} of size k, as sorted index lists.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t s, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < s; ++i) {
      if (mask & (1u << i)) subset.push_back(i);
    }
    out.push_back(std::move(subset));
  }
  return out;
}

Integer common_denominator(const std::vector<SparsePoly>& polys) {
  Integer out(1);
  for (const auto& p : polys) {
    for (const auto& [m, c] : p.terms()) mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), c.raw().get_den_mpz_t());
  }
  return out;
}

}  // namespace

SparsePoly build_f(long a, long m, std::size_t s, long r, long ell) {
  if (s < 1) throw UsageError("build_f needs s >= 1");
  if (m < 1) throw UsageError("build_f needs m >= 1");
  if (r < 2) throw UsageError("build_f needs r >= 2");
  if (s > kMaxVars) throw UsageError("build_f supports at most " + std::to_string(kMaxVars) + " variables");
  const long n = m + static_cast<long>(s);
  const SparsePoly u = u_poly(a, m, s, r);
  const Rational rank_excess(r - 1);

  PolyAccumulator acc(s);
  acc.add(Monomial(s), binom_int(Integer(ell + n), n));

  // (-1)^{m+1} (r/m!) (x_1...x_s) prod_j [u - l - j a]
  {
    Monomial all_vars(s);
    for (std::size_t i = 0; i < s; ++i) all_vars.set(i, 1);
    SparsePoly product = SparsePoly::from_terms(s, {{all_vars, Rational(1)}});
    for (long j = 1; j <= m; ++j) product *= u - Rational(ell + j * a);
    acc.add_scaled(product, Rational(sign_of(m + 1) * r) / Rational(factorial(static_cast<unsigned>(m))));
  }

  acc.add_scaled(binom_poly(u - Rational(ell + 1), n), Rational(sign_of(m + static_cast<long>(s))) * rank_excess);

  // The subset sums depend on T only up to relabeling, so one
  // representative per size k is expanded and then moved onto each T.
  // Representatives are scaled to integer coefficients first so that the
  // bulk accumulation stays on integer arithmetic.
  std::vector<SparsePoly> plain(s + 1);
  std::vector<SparsePoly> twisted(s + 1);
  for (std::size_t k = 1; k <= s; ++k) {
    SparsePoly head_sum(k);
    for (std::size_t i = 0; i < k; ++i) head_sum += SparsePoly::variable(k, i);
    plain[k] = binom_poly(head_sum - Rational(ell + 1), n);

    SparsePoly head_in_s(s);
    for (std::size_t i = 0; i < k; ++i) head_in_s += SparsePoly::variable(s, i);
    twisted[k] = binom_poly(head_in_s + u - Rational(ell + 1), n);
  }
  const Integer plain_den = common_denominator(plain);
  const Integer twisted_den = common_denominator(twisted);
  PolyAccumulator plain_acc(s);
  PolyAccumulator twisted_acc(s);
  for (std::size_t k = 1; k <= s; ++k) {
    const Rational sign(sign_of(static_cast<long>(k) + m + static_cast<long>(s)));
    const SparsePoly plain_int = plain[k] * Rational(plain_den);
    const SparsePoly twisted_int = twisted[k] * Rational(twisted_den);
    for (const auto& subset : subsets_of_size(s, k)) {
      plain_acc.add_renamed(plain_int, subset, sign);
      std::vector<std::size_t> perm(subset);
      std::vector<bool> used(s, false);
      for (auto i : subset) used[i] = true;
      for (std::size_t i = 0; i < s; ++i) {
        if (!used[i]) perm.push_back(i);
      }
      twisted_acc.add_renamed(twisted_int, perm, sign);
    }
  }
  acc.add_scaled(plain_acc.take(), Rational(Integer(1), plain_den));
  acc.add_scaled(twisted_acc.take(), rank_excess / Rational(twisted_den));
  return acc.take();
}

}  // namespace ulrich
