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

#include <gtest/gtest.h>

#include <algorithm>

#include "ulrich/appendix.hpp"
#include "ulrich/errors.hpp"
#include "ulrich/euler.hpp"

namespace ulrich {
namespace {

BasisExpr reduced(const SparsePoly& p) { return to_basis(divide_all_vars(p)); }

// v_{s,a,b} at a point, straight from its definition.
Rational v_direct(const std::vector<long>& x, long a, long b) {
  const long s = static_cast<long>(x.size());
  Integer m4 = 0, m22 = 0, m2 = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Integer sq = Integer(x[i]) * x[i];
    m4 += sq * sq;
    m2 += sq;
    for (std::size_t j = i + 1; j < x.size(); ++j) m22 += sq * x[j] * x[j];
  }
  const Integer a2 = Integer(a) * a;
  return Rational(Integer(b * m4 + 10 * m22 + (50 * a2 - 10 * s - 50) * m2 - 250 * a2 - 50 * a2 * s + 5 * s * s + 150 +
                          (55 - b) * s - 5 * b + (100 + 5 * b) * a2 * a2));
}

std::vector<Rational> ones(std::size_t s) { return std::vector<Rational>(s, Rational(1)); }

TEST(Builders, PrintedLeadingCoefficients) {
  for (long a = 2; a <= 4; ++a)
    for (std::size_t s = 2; s <= 5; ++s) {
      AppendixWorkspace ws(a, s);
      const BasisExpr delta = reduced(ws.delta());
      EXPECT_EQ(delta.coeff(Partition{2}), Rational(7, 8));
      EXPECT_EQ(delta.coeff(Partition{1, 1}), Rational(12, 8));
      EXPECT_EQ(reduced(ws.h()).coeff(Partition{3}), Rational(19, 8));
      EXPECT_EQ(reduced(ws.chi_prime()).coeff(Partition{4}), Rational(675, 768));
      EXPECT_EQ(reduced(ws.c()).coeff(Partition{4}), Rational(265, 64));
      const long n = static_cast<long>(s);
      EXPECT_EQ(reduced(ws.g()).coeff(Partition{2}),
                Rational(5, 1728) * Rational(7100 - 10800 * a + 4036 * a * a + 2860 * n - 2160 * a * n + 288 * n * n));
    }
}

TEST(Builders, PrefactorOfG) {
  // The printed expansion carries 5/1728; m_4 coefficient 5 * 64 / 1728.
  EXPECT_EQ(printed_expansion(SymFunction::kG, 2, 4).coeff(Partition{4}), Rational(5 * 64, 1728));
  EXPECT_EQ(reduced(build_g(2, 4)).coeff(Partition{4}), Rational(5 * 64, 1728));
}

TEST(Builders, ChiPrimeIsMeanOfKAndC) {
  AppendixWorkspace ws(3, 4);
  EXPECT_EQ(ws.chi_prime() * Rational(12), ws.k() + ws.c());
  EXPECT_EQ(ws.get(SymFunction::kH), ws.h());
  EXPECT_EQ(ws.all_vars_product(), expand_m(Partition::ones(4), 4));
}

TEST(BuildV, AllOnesValues) {
  for (long b : {8L, 9L})
    for (std::size_t s = 2; s <= 6; ++s) EXPECT_TRUE(build_v(s, 1, b).eval(ones(s)).is_zero());
  for (long b : {8L, 9L})
    for (long a = 1; a <= 6; ++a)
      for (std::size_t s = 2; s <= 8; ++s) {
        const Rational closed((100 + 5 * b) * a * a * a * a - 250 * a * a + 150 - 5 * b);
        EXPECT_EQ(build_v(s, a, b).eval(ones(s)), v_direct(std::vector<long>(s, 1), a, b));
        EXPECT_EQ(build_v(s, a, b).eval(ones(s)), closed);
      }
  EXPECT_EQ(build_v(2, 2, 8).eval(ones(2)), Rational(1350));
}

TEST(BuildV, MatchesDefinitionOnGrid) {
  for (long a = 1; a <= 3; ++a)
    for (long b : {7L, 8L, 9L}) {
      const SparsePoly v = build_v(3, a, b);
      for (long d1 = 1; d1 <= 3; ++d1)
        for (long d2 = 1; d2 <= 3; ++d2) {
          const std::vector<long> x{d1, d2, 4};
          EXPECT_EQ(v.eval(std::vector<Rational>(x.begin(), x.end())), v_direct(x, a, b));
        }
    }
}

TEST(BuildV, RecursionAtTwo) {
  for (std::size_t s = 2; s <= 5; ++s)
    for (long b : {8L, 9L}) {
      const SparsePoly step =
          (expand_m(Partition{2}, s) * Rational(2) + Rational(b + 10 - 2 * static_cast<long>(s))) * Rational(75);
      EXPECT_EQ(build_v(s, 2, b) - build_v(s, 1, b), step);
    }
}

TEST(CoeffTables, BasisOrder) {
  const auto& basis = degree4_basis();
  EXPECT_EQ(basis[0], Partition{4});
  EXPECT_EQ(basis[4], Partition::ones(4));
  EXPECT_EQ(basis[11], Partition());
  EXPECT_TRUE(std::is_sorted(basis.begin(), basis.end(), BasisOrder{}));
}

TEST(CheckFTable, Examples) {
  const VerificationReport r = check_f_table(2, 4, FVariant::kRank2Twist0);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.residuals.size(), 12u);
  EXPECT_EQ(f_coefficient_table(FVariant::kRank2Twist0, 2, 4).coeffs[0], Rational(66));

  EXPECT_TRUE(check_f_table(3, 5, FVariant::kRank3Twist0).pass);
  const Rational a9(209050 - 345000 * 3 + 140850 * 9 + 83960 * 5 - 69000 * 15 + 8430 * 25);
  EXPECT_EQ(reduced(build_f(3, 4, 5, 3, 0)).coeff(Partition{2}), a9 / Rational(1920));
  EXPECT_THROW(check_f_table(2, 3, FVariant::kRank2Twist0), UsageError);
  EXPECT_THROW(f_coefficient_table(FVariant::kRank2Twist0, 2, 3), UsageError);
}

TEST(CheckFTable, DisplaysAtFour) {
  for (long a = 2; a <= 4; ++a) {
    AppendixWorkspace ws(a, 4);
    for (FVariant v : kAllFVariants) {
      EXPECT_TRUE(check_f_s4_display(ws, v).pass) << variant_name(v) << " a=" << a;
      const CoeffTable display = f_s4_display(v, a), table = f_coefficient_table(v, a, 4);
      for (std::size_t i = 0; i < 12; ++i) EXPECT_EQ(display.coeffs[i] / display.M, table.coeffs[i] / table.M);
    }
  }
  AppendixWorkspace five(2, 5);
  EXPECT_THROW(check_f_s4_display(five, FVariant::kRank2Twist0), UsageError);
}

TEST(CheckExpansions, SmallAndLargeS) {
  for (std::size_t s = 1; s <= 5; ++s) {
    const VerificationReport r = check_expansions(3, s);
    EXPECT_TRUE(r.pass) << "s=" << s;
    EXPECT_TRUE(std::any_of(r.notes.begin(), r.notes.end(), [](const std::string& n) { return n.find("-5)") != n.npos; }));
  }
}

TEST(CheckDifferences, Examples) {
  EXPECT_TRUE(check_difference_identities(2, 4).pass);
  const VerificationReport r = check_difference_identities(5, 6);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.residuals.empty());
  EXPECT_THROW(check_difference_identities(2, 3), UsageError);

  AppendixWorkspace ws(2, 4);
  const Rational gap = (ws.g() - ws.f(FVariant::kRank2Twist0)).eval(ones(4));
  EXPECT_EQ(gap, Rational(1350, 4320));
  EXPECT_EQ(gap, Rational(5, 16));
  EXPECT_EQ(ws.f(FVariant::kRank2Twist0).eval(ones(4)), Rational(5, 4));
}

TEST(CheckFStructure, Examples) {
  EXPECT_TRUE(check_f_structure(2, 4, 5, 2, 0).pass);
  EXPECT_TRUE(check_f_structure(3, 4, 6, 3, 1).pass);
  EXPECT_THROW(check_f_structure(2, 4, 1, 2, 0), UsageError);
}

TEST(CheckFStructure, DetectsMutations) {
  const SparsePoly f = build_f(2, 4, 4, 2, 0);
  for (std::size_t i : {std::size_t{0}, f.size() / 2, f.size() - 1}) {
    std::vector<SparsePoly::Term> terms = f.terms();
    terms[i].second += Rational(1, 7);
    const SparsePoly mutated = SparsePoly::from_terms(f.nvars(), std::move(terms));
    EXPECT_FALSE(check_f_structure_of(mutated, 2, 4, 2, 0).pass) << i;
  }
  // A symmetric, divisible perturbation is still caught by specialization.
  const SparsePoly bump = f + expand_m(Partition::ones(4), 4);
  const VerificationReport r = check_f_structure_of(bump, 2, 4, 2, 0);
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.residuals.empty());
}

TEST(CheckVPositivity, ReportsAndPreconditions) {
  const auto reports = check_v_positivity(3, 3, 3);
  ASSERT_EQ(reports.size(), 2u * 2u * 3u);
  for (const VReport& r : reports) {
    EXPECT_EQ(r.values.size(), r.s == 2 ? 9u : 27u);
    EXPECT_TRUE(r.ones_value_checked);
    EXPECT_EQ(r.recursion_checked, r.a >= 2);
    EXPECT_EQ(r.base_checked, r.a == 1);
    EXPECT_EQ(r.positive, r.a >= 2);
    for (const auto& [tuple, value] : r.values) EXPECT_EQ(value, v_direct(tuple, r.a, r.b));
  }
  EXPECT_EQ(reports.front().min_value, Rational(0));
  EXPECT_THROW(check_v_positivity(1, 3, 3), UsageError);
  EXPECT_THROW(check_v_positivity(3, 1, 3), UsageError);
  EXPECT_THROW(check_v_positivity(3, 3, 0), UsageError);
}

TEST(Variants, Names) {
  for (FVariant v : kAllFVariants) EXPECT_EQ(parse_variant(variant_name(v)), v);
  EXPECT_THROW(parse_variant("r4l0"), UsageError);
  EXPECT_EQ(variant_rank(FVariant::kRank3Twist1), 3);
  EXPECT_EQ(variant_twist(FVariant::kRank3Twist1), 1);
}

}  // namespace
}  // namespace ulrich
