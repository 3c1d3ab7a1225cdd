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

#include "ulrich/symmetric.hpp"

#include <algorithm>
#include <unordered_map>

#include "ulrich/errors.hpp"

namespace ulrich {

Rational BasisExpr::coeff(const Partition& p) const {
  auto it = coeffs_.find(p);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void BasisExpr::add(const Partition& lambda, const Rational& c) {
  if (lambda.length() > nvars_ || c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

BasisExpr& BasisExpr::operator+=(const BasisExpr& o) {
  if (o.nvars_ != nvars_) throw UsageError("basis expressions over different variable counts");
  for (const auto& [p, c] : o.coeffs_) add(p, c);
  return *this;
}

BasisExpr& BasisExpr::operator-=(const BasisExpr& o) {
  if (o.nvars_ != nvars_) throw UsageError("basis expressions over different variable counts");
  for (const auto& [p, c] : o.coeffs_) add(p, -c);
  return *this;
}

BasisExpr& BasisExpr::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [p, v] : coeffs_) v *= c;
  return *this;
}

SparsePoly expand_m(const Partition& lambda, std::size_t s) {
  if (s == 0) throw UsageError("expand_m needs at least one variable");
  if (lambda.length() > s) return SparsePoly(s);
  std::vector<unsigned> exps(s, 0);
  std::copy(lambda.parts().begin(), lambda.parts().end(), exps.begin());
  std::sort(exps.begin(), exps.end());
  std::vector<SparsePoly::Term> terms;
  do {
    terms.emplace_back(Monomial(std::span<const unsigned>(exps)), Rational(1));
  } while (std::next_permutation(exps.begin(), exps.end()));
  return SparsePoly::from_terms(s, std::move(terms));
}

std::size_t orbit_size(const Partition& lambda, std::size_t s) {
  if (lambda.length() > s) return 0;
  // s! / (prod of multiplicity factorials), computed incrementally.
  std::vector<unsigned> mult;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    mult.push_back(static_cast<unsigned>(j - i));
    i = j;
  }
  mult.push_back(static_cast<unsigned>(s - parts.size()));
  std::size_t out = 1;
  std::size_t placed = 0;
  for (unsigned k : mult) {
    for (unsigned i = 1; i <= k; ++i) {
      ++placed;
      out = out * placed / i;
    }
  }
  return out;
}

BasisExpr to_basis(const SparsePoly& p) {
  struct Orbit {
    Rational coeff;
    std::size_t seen = 0;
  };
  std::map<Partition, Orbit, BasisOrder> orbits;
  for (const auto& [m, c] : p.terms()) {
    auto key = Partition::from_exponents(m.exponents());
    auto [it, inserted] = orbits.try_emplace(key, Orbit{c, 0});
    if (!inserted && it->second.coeff != c) {
      throw SymmetryError("not symmetric: coefficients " + it->second.coeff.to_string() + " and " +
                          c.to_string() + " in the orbit of " + key.label());
    }
    ++it->second.seen;
  }
  BasisExpr out(p.nvars());
  for (const auto& [lambda, orbit] : orbits) {
    const std::size_t expected = orbit_size(lambda, p.nvars());
    if (orbit.seen != expected) {
      throw SymmetryError("not symmetric: orbit of " + lambda.label() + " has " +
                          std::to_string(orbit.seen) + " of " + std::to_string(expected) + " monomials");
    }
    out.add(lambda, orbit.coeff);
  }
  return out;
}

SparsePoly from_basis(const BasisExpr& b) {
  PolyAccumulator acc(b.nvars());
  for (const auto& [lambda, c] : b.coeffs()) acc.add_scaled(expand_m(lambda, b.nvars()), c);
  return acc.take();
}

SparsePoly divide_all_vars(const SparsePoly& p) {
  std::vector<SparsePoly::Term> out;
  out.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    Monomial q(p.nvars());
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (m[i] == 0) {
        throw DivisibilityError("term " + SparsePoly::from_terms(p.nvars(), {{m, c}}).to_string() +
                                " is not divisible by x" + std::to_string(i + 1));
      }
      q.set(i, m[i] - 1);
    }
    out.emplace_back(q, c);
  }
  return SparsePoly::from_terms(p.nvars(), std::move(out));
}

SparsePoly specialize_ones(const SparsePoly& p, std::size_t k) {
  if (k < 1 || k > p.nvars()) {
    throw UsageError("specialize_ones needs 1 <= k <= s (k=" + std::to_string(k) + ", s=" +
                     std::to_string(p.nvars()) + ")");
  }
  PolyAccumulator acc(k);
  for (const auto& [m, c] : p.terms()) {
    Monomial q(k);
    for (std::size_t i = 0; i < k; ++i) q.set(i, m[i]);
    acc.add(q, c);
  }
  return acc.take();
}

}  // namespace ulrich
