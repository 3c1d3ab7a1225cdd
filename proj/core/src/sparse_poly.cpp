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

#include "ulrich/sparse_poly.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>

#include "ulrich/errors.hpp"

namespace ulrich {

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVars) throw UsageError("too many variables: " + std::to_string(nvars));
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const unsigned> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= nvars_) throw UsageError("monomial index out of range");
  if (e > kMaxExponent) throw UsageError("exponent too large");
  degree_ = static_cast<std::uint16_t>(degree_ - exps_[i] + e);
  exps_[i] = static_cast<std::uint8_t>(e);
}

std::vector<unsigned> Monomial::exponents() const {
  return std::vector<unsigned>(exps_.begin(), exps_.begin() + nvars_);
}

std::size_t Monomial::support_size() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(exps_.begin(), exps_.begin() + nvars_, [](auto e) { return e != 0; }));
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    const unsigned e = unsigned{exps_[i]} + o.exps_[i];
    if (e > kMaxExponent) throw UsageError("exponent overflow in product");
    out.exps_[i] = static_cast<std::uint8_t>(e);
  }
  out.degree_ = static_cast<std::uint16_t>(degree_ + o.degree_);
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  const int lex = std::memcmp(a.exps_.data(), b.exps_.data(), kMaxVars);
  if (lex != 0) return lex < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return a.nvars_ <=> b.nvars_;
}

std::size_t Monomial::hash() const noexcept {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::memcpy(&lo, exps_.data(), 8);
  std::memcpy(&hi, exps_.data() + 8, 8);
  std::uint64_t h = lo * 0x9E3779B97F4A7C15ull;
  h ^= (hi + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2)) * 0xBF58476D1CE4E5B9ull;
  return static_cast<std::size_t>(h ^ (h >> 31));
}

namespace {

bool term_before(const SparsePoly::Term& a, const SparsePoly::Term& b) { return a.first > b.first; }

}  // namespace

SparsePoly SparsePoly::constant(std::size_t nvars, const Rational& c) {
  SparsePoly p(nvars);
  if (!c.is_zero()) p.terms_.emplace_back(Monomial(nvars), c);
  return p;
}

SparsePoly SparsePoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw UsageError("variable index out of range");
  Monomial m(nvars);
  m.set(index, 1);
  SparsePoly p(nvars);
  p.terms_.emplace_back(m, Rational(1));
  return p;
}

SparsePoly SparsePoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const auto& [m, c] : terms) {
    if (m.nvars() != nvars) throw UsageError("term has wrong number of variables");
  }
  std::sort(terms.begin(), terms.end(), term_before);
  SparsePoly p(nvars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
  return p;
}

SparsePoly SparsePoly::from_canonical_terms(std::size_t nvars, std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].first.nvars() != nvars) throw UsageError("term has wrong number of variables");
    if (terms[i].second.is_zero()) throw UsageError("canonical terms must be nonzero");
    if (i > 0 && !(terms[i - 1].first > terms[i].first)) throw UsageError("terms are not in canonical order");
  }
  SparsePoly p(nvars);
  p.terms_ = std::move(terms);
  return p;
}

unsigned SparsePoly::degree() const noexcept {
  return terms_.empty() ? 0 : terms_.front().first.degree();
}

Rational SparsePoly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.first > key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rational(0);
}

void SparsePoly::require_same_nvars(const SparsePoly& o, const char* op) const {
  if (nvars_ != o.nvars_) {
    throw UsageError(std::string("nvars mismatch in ") + op + ": " + std::to_string(nvars_) +
                     " vs " + std::to_string(o.nvars_));
  }
}

namespace {

template <bool Subtract>
std::vector<SparsePoly::Term> merge(const std::vector<SparsePoly::Term>& a,
                                    const std::vector<SparsePoly::Term>& b) {
  std::vector<SparsePoly::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first > j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first > i->first) {
      out.emplace_back(j->first, Subtract ? -j->second : j->second);
      ++j;
    } else {
      Rational c = Subtract ? i->second - j->second : i->second + j->second;
      if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  require_same_nvars(o, "add");
  terms_ = merge<false>(terms_, o.terms_);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  require_same_nvars(o, "subtract");
  terms_ = merge<true>(terms_, o.terms_);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  a.require_same_nvars(b, "multiply");
  PolyAccumulator acc(a.nvars());
  acc.add_product(a, b);
  return acc.take();
}

SparsePoly operator-(SparsePoly a) {
  for (auto& t : a.terms_) t.second = -t.second;
  return a;
}

Rational SparsePoly::eval(std::span<const Rational> point) const {
  if (point.size() != nvars_) {
    throw UsageError("evaluation point has " + std::to_string(point.size()) +
                     " coordinates, polynomial has " + std::to_string(nvars_) + " variables");
  }
  // Powers are cached per variable; degrees stay small.
  std::vector<std::vector<Rational>> powers(nvars_);
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational value = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      const unsigned e = m[i];
      if (e == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(Rational(1));
      while (cache.size() <= e) cache.push_back(cache.back() * point[i]);
      value *= cache[e];
    }
    total += value;
  }
  return total;
}

SparsePoly SparsePoly::rename(std::span<const std::size_t> mapping, std::size_t target_nvars) const {
  if (mapping.size() != nvars_) throw UsageError("rename mapping has wrong length");
  for (auto t : mapping) {
    if (t >= target_nvars) throw UsageError("rename target out of range");
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial r(target_nvars);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] != 0) r.set(mapping[i], r[mapping[i]] + m[i]);
    }
    out.emplace_back(r, c);
  }
  return from_terms(target_nvars, std::move(out));
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (!unit || m.degree() == 0) os << mag;
    bool need_star = !unit;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << "*";
      os << "x" << (i + 1);
      if (m[i] > 1) os << "^" << m[i];
      need_star = true;
    }
  }
  return os.str();
}

SparsePoly pow(const SparsePoly& base, unsigned exponent) {
  SparsePoly out = SparsePoly::constant(base.nvars(), Rational(1));
  for (unsigned i = 0; i < exponent; ++i) out = out * base;
  return out;
}

PolyAccumulator::PolyAccumulator(std::size_t nvars) : nvars_(nvars) {}

void PolyAccumulator::add(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw UsageError("accumulator nvars mismatch");
  auto [it, inserted] = table_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void PolyAccumulator::add(const SparsePoly& p) {
  for (const auto& [m, c] : p.terms()) add(m, c);
}

void PolyAccumulator::add_scaled(const SparsePoly& p, const Rational& c) {
  if (c.is_zero()) return;
  for (const auto& [m, v] : p.terms()) add(m, v * c);
}

void PolyAccumulator::add_renamed(const SparsePoly& p, std::span<const std::size_t> mapping,
                                  const Rational& c) {
  if (mapping.size() != p.nvars()) throw UsageError("rename mapping has wrong length");
  for (auto t : mapping) {
    if (t >= nvars_) throw UsageError("rename target out of range");
  }
  if (c.is_zero()) return;
  for (const auto& [m, v] : p.terms()) {
    Monomial r(nvars_);
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (m[i] != 0) r.set(mapping[i], r[mapping[i]] + m[i]);
    }
    auto [it, inserted] = table_.try_emplace(r);
    if (inserted) {
      it->second = v * c;
    } else {
      it->second.add_product(v, c);
    }
  }
}

void PolyAccumulator::add_product(const SparsePoly& a, const SparsePoly& b) {
  if (a.nvars() != nvars_ || b.nvars() != nvars_) throw UsageError("accumulator nvars mismatch");
  table_.reserve(table_.size() + a.size() * b.size());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      auto [it, inserted] = table_.try_emplace(ma * mb);
      if (inserted) {
        it->second = ca * cb;
      } else {
        it->second.add_product(ca, cb);
      }
    }
  }
}

SparsePoly PolyAccumulator::take() {
  std::vector<SparsePoly::Term> terms;
  terms.reserve(table_.size());
  for (auto& [m, c] : table_) {
    if (!c.is_zero()) terms.emplace_back(m, std::move(c));
  }
  table_.clear();
  return SparsePoly::from_terms(nvars_, std::move(terms));
}

}  // namespace ulrich
