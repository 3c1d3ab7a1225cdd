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

#include <random>

#include "ulrich/appendix.hpp"
#include "ulrich/errors.hpp"
#include "ulrich/invariants.hpp"

namespace ulrich {
namespace {

struct Sums {
  long s, S, Sp;
  Integer d;
};

Sums sums(const std::vector<long>& x) {
  Sums out{static_cast<long>(x.size()), 0, 0, 1};
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.S += x[i];
    out.d *= x[i];
    for (std::size_t j = i + 1; j < x.size(); ++j) out.Sp += x[i] * x[j];
  }
  return out;
}

std::vector<std::vector<long>> sample(unsigned seed, int count) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> len(1, 6), deg(1, 4);
  std::vector<std::vector<long>> out;
  for (int i = 0; i < count; ++i) {
    std::vector<long> t(static_cast<std::size_t>(len(rng)));
    for (long& d : t) d = deg(rng);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Rational> as_point(const std::vector<long>& x) { return {x.begin(), x.end()}; }

// Printed fourfold closed forms.
Rational e_printed_r2(long a, const Sums& v) {
  return Rational(1, 12) * Rational(70 - 150 * a + 80 * a * a + 29 * v.s - 30 * a * v.s + 3 * v.s * v.s - 30 * v.S +
                                    30 * a * v.S - 6 * v.s * v.S + 4 * v.S * v.S - 2 * v.Sp);
}

Rational deg_printed_r3(long a, const Sums& v) {
  return Rational(v.d) * Rational(1, 8) *
         Rational(145 - 300 * a + 155 * a * a + 59 * v.s - 60 * a * v.s + 6 * v.s * v.s +
                  (-60 + 60 * a - 12 * v.s) * v.S + 7 * v.S * v.S - 2 * v.Sp);
}

TEST(CIContext, SortsDegrees) {
  const CIContext ctx(4, {1, 3, 2}, 2, 2);
  EXPECT_EQ(ctx.degrees(), (std::vector<long>{3, 2, 1}));
  EXPECT_EQ(ctx, CIContext(4, {2, 1, 3}, 2, 2));
}

TEST(Invariants, CanonicalClass) {
  EXPECT_EQ(canonical_coeff(CIContext(4, {1}, 2, 2)), Rational(-5));
  EXPECT_EQ(canonical_coeff(CIContext(4, {2, 2}, 2, 2)), Rational(-3));
  EXPECT_EQ(canonical_coeff(CIContext(3, {5}, 2, 2)), Rational(0));
}

TEST(Invariants, SecondChernClass) {
  EXPECT_EQ(c2X_coeff(CIContext(4, {1}, 2, 2)), Rational(10));
  const CIContext k3(2, {4}, 2, 2);
  EXPECT_EQ(c2X_coeff(k3), Rational(6));
  EXPECT_EQ(c2X_coeff(k3) * Rational(4), Rational(24));
  EXPECT_EQ(c2X_coeff(CIContext(4, {2, 2}, 2, 2)), Rational(5));
}

TEST(Invariants, FirstChernClass) {
  for (const auto& x : sample(1, 20))
    for (long a = 2; a <= 5; ++a) {
      const Sums v = sums(x);
      EXPECT_EQ(u_coeff(CIContext(4, x, a, 2)), Rational(5 * (a - 1) + v.S - v.s));
    }
  EXPECT_EQ(u_coeff(CIContext(4, {2, 2}, 2, 2)), Rational(7));
  EXPECT_EQ(u_coeff(CIContext(4, {1, 1, 1, 1}, 3, 3)), Rational(15));
}

TEST(Invariants, FourfoldSpecializations) {
  for (const auto& x : sample(2, 40))
    for (long a = 2; a <= 5; ++a) {
      const Sums v = sums(x);
      const CIContext r2(4, x, a, 2), r3(4, x, a, 3);
      EXPECT_EQ(e_coeff(r2), e_printed_r2(a, v));
      EXPECT_EQ(degZ(r2), Rational(v.d) * e_printed_r2(a, v));
      EXPECT_EQ(degZ(r3), deg_printed_r3(a, v));
      EXPECT_EQ(e_coeff(r3) * Rational(v.d), deg_printed_r3(a, v));
      EXPECT_EQ(degZ(r3), build_delta(a, x.size()).eval(as_point(x)));
    }
}

TEST(Invariants, DegreeRoutesAgree) {
  for (const auto& x : sample(3, 60))
    for (long m : {3L, 4L, 5L})
      for (long r : {2L, 3L})
        for (long a = 2; a <= 5; ++a) {
          const CIContext ctx(m, x, a, r);
          EXPECT_EQ(degZ(ctx), degZ_via_chern(ctx));
          EXPECT_EQ(e_coeff(ctx) * Rational(ctx.profile().d()), degZ(ctx));
        }
  EXPECT_EQ(degZ(CIContext(4, {1, 1, 1, 1}, 2, 2)), degZ_via_chern(CIContext(4, {1, 1, 1, 1}, 2, 2)));
}

TEST(RankTwoChain, PrintedForms) {
  for (const auto& x : sample(4, 30))
    for (long a = 2; a <= 4; ++a) {
      const Sums v = sums(x);
      const UlrichNumerics n = r2_chain(CIContext(4, x, a, 2));
      ASSERT_TRUE(n.kZ.has_value());
      EXPECT_EQ(*n.kZ, Rational(2 * v.S - 2 * v.s + 5 * (a - 2)));
      EXPECT_EQ(n.kZ2, *n.kZ * *n.kZ * n.degZ);
      const Rational k2(100 - 100 * a + 25 * a * a + 40 * v.s - 20 * a * v.s + 4 * v.s * v.s - 40 * v.S + 20 * a * v.S -
                        8 * v.s * v.S + 4 * v.S * v.S);
      EXPECT_EQ(n.kZ2, k2 * n.degZ);
      const Rational c2(650 - 750 * a + 220 * a * a + 265 * v.s - 150 * a * v.s + 27 * v.s * v.s - 270 * v.S +
                        150 * a * v.S - 54 * v.s * v.S + 32 * v.S * v.S - 10 * v.Sp);
      EXPECT_EQ(n.c2Z, c2 * n.degZ / Rational(12));
      EXPECT_EQ(n.chiZ_noether, build_g(a, x.size()).eval(as_point(x)));
    }
  const UlrichNumerics n = r2_chain(CIContext(4, {2, 2}, 2, 2));
  EXPECT_EQ(*n.kZ, Rational(4));
}

TEST(RankThreeChain, PrintedForms) {
  for (const auto& x : sample(5, 20))
    for (long a = 2; a <= 4; ++a) {
      const Sums v = sums(x);
      const UlrichNumerics n = r3_chain(CIContext(4, x, a, 3));
      EXPECT_FALSE(n.kZ.has_value());
      AppendixWorkspace ws(a, x.size());
      const auto pt = as_point(x);
      EXPECT_EQ(n.kZH, ws.h().eval(pt));
      EXPECT_EQ(n.kZ2, ws.k().eval(pt));
      const Rational bracket(-1315 + 1800 * a - 605 * a * a - 523 * v.s + 360 * a * v.s - 52 * v.s * v.s + 520 * v.S -
                             360 * a * v.S + 104 * v.s * v.S - 49 * v.S * v.S - 6 * v.Sp);
      EXPECT_EQ(n.c2Z, bracket * n.degZ / Rational(8) + Rational(4 * v.S - 4 * v.s - 20 + 15 * a) * n.kZH);
      EXPECT_EQ(n.c2Z, ws.c().eval(pt));
      EXPECT_EQ(n.chiZ_noether, ws.chi_prime().eval(pt));
    }
}

TEST(Chains, RequireFourfoldAndRank) {
  EXPECT_THROW(r2_chain(CIContext(5, {1}, 2, 2)), UsageError);
  EXPECT_THROW(r2_chain(CIContext(4, {1}, 2, 3)), UsageError);
  EXPECT_THROW(r3_chain(CIContext(4, {1}, 2, 2)), UsageError);
}

TEST(Chains, EndgameRelation) {
  for (const auto& x : sample(6, 40))
    for (long a = 2; a <= 4; ++a) {
      const Sums v = sums(x);
      const UlrichNumerics n2 = r2_chain(CIContext(4, x, a, 2));
      const UlrichNumerics n3 = r3_chain(CIContext(4, x, a, 3));
      const auto pt = as_point(x);
      EXPECT_EQ((n2.chiZ_noether - n2.chiZ_rr) * Rational(4320), Rational(v.d) * build_v(x.size(), a, 8).eval(pt));
      EXPECT_EQ((n3.chiZ_noether - n3.chiZ_rr) * Rational(3840), Rational(v.d) * build_v(x.size(), a, 9).eval(pt));
    }
}

}  // namespace
}  // namespace ulrich
