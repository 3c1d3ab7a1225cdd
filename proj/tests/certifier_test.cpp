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

#include <numeric>

#include "ulrich/appendix.hpp"
#include "ulrich/certifier.hpp"
#include "ulrich/errors.hpp"

namespace ulrich {
namespace {

// Exponent of p in n!, by dividing n! itself.
long valuation_of_factorial(long n, long p) {
  Integer f = factorial(static_cast<unsigned>(n));
  long t = 0;
  while (f % p == 0) {
    f /= p;
    ++t;
  }
  return t;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

TEST(Es53, Examples) {
  for (long a : {1L, 5L, 7L, 11L, 25L}) EXPECT_TRUE(es53_check(4, a, 2).empty()) << a;
  const auto five = es53_check(5, 2, 2);
  ASSERT_EQ(five.size(), 1u);
  EXPECT_EQ(five[0].text(), "2^3 | r");
  const auto six = es53_check(6, 2, 3);
  ASSERT_EQ(six.size(), 1u);
  EXPECT_EQ(six[0].text(), "2^4 | r");
  EXPECT_EQ(es53_check(6, 6, 1).size(), 2u);
  EXPECT_TRUE(es53_check(5, 2, 8).empty());
  EXPECT_THROW(es53_check(0, 2, 2), UsageError);
}

TEST(Es53, AgreesWithFactorization) {
  for (long n = 1; n <= 8; ++n)
    for (long a = 1; a <= 12; ++a)
      for (long r = 1; r <= 6; ++r) {
        std::vector<std::string> expected;
        for (long p = 2; p <= a; ++p) {
          if (!is_prime(p) || a % p != 0) continue;
          const long t = valuation_of_factorial(n, p);
          Integer pt;
          mpz_ui_pow_ui(pt.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(t));
          if (t > 0 && r % pt != 0) expected.push_back(std::to_string(p) + "^" + std::to_string(t) + " | r");
        }
        std::vector<std::string> got;
        for (const auto& v : es53_check(n, a, r)) got.push_back(v.text());
        EXPECT_EQ(got, expected) << n << "," << a << "," << r;
      }
}

TEST(Cnec, LowDimensionalTranslations) {
  for (long r = 1; r <= 6; ++r)
    for (long a = 1; a <= 10; ++a) {
      EXPECT_TRUE(cnec_check(1, a, r));
      EXPECT_EQ(cnec_check(2, a, r), r * (a - 1) % 2 == 0);
      EXPECT_EQ(cnec_check(3, a, r), r * (a * a - 1) % 6 == 0);
    }
}

TEST(Cnec, FiniteWindowDecidesAllTwists) {
  for (long n = 1; n <= 6; ++n)
    for (long a = 1; a <= 6; ++a)
      for (long r = 1; r <= 4; ++r) {
        bool all = true;
        const Integer nf = factorial(static_cast<unsigned>(n));
        for (long l = -40; l <= 40 && all; ++l) {
          Integer v = r;
          for (long j = 1; j <= n; ++j) v *= l + j * a;
          all = v % nf == 0;
        }
        EXPECT_EQ(cnec_check(n, a, r), all) << n << "," << a << "," << r;
      }
}

TEST(Es53, ImpliesCnecFailure) {
  for (long n = 1; n <= 8; ++n)
    for (long a = 1; a <= 10; ++a)
      for (long r = 1; r <= 6; ++r)
        if (n > 3 && !es53_check(n, a, r).empty()) EXPECT_FALSE(cnec_check(n, a, r)) << n << "," << a << "," << r;
}

TEST(Rank1, Intervals) {
  const Certificate c = rank1_certificate(CIContext(4, {1}, 2, 1));
  EXPECT_EQ(c.branch, Branch::kRank1Interval);
  EXPECT_EQ(c.conclusion, Conclusion::kNonexistent);
  EXPECT_EQ(c.witnesses.interval, std::make_pair(Integer(4), Integer(1)));
  const Certificate d = rank1_certificate(CIContext(4, {2, 2}, 3, 1));
  EXPECT_EQ(d.witnesses.interval, std::make_pair(Integer(10), Integer(2)));
  const Certificate line = rank1_certificate(CIContext(1, {1}, 2, 1));
  EXPECT_EQ(line.witnesses.interval, std::make_pair(Integer(1), Integer(1)));
  EXPECT_EQ(line.conclusion, Conclusion::kInconclusive);
  EXPECT_THROW(rank1_certificate(CIContext(4, {1}, 2, 2)), UsageError);
}

TEST(Reduce, AppendsAndPads) {
  EXPECT_EQ(reduce_to_dim4(CIContext(6, {2, 2}, 2, 2)), CIContext(4, {2, 2, 2, 2}, 2, 2));
  EXPECT_EQ(reduce_to_dim4(CIContext(4, {1}, 3, 2)), CIContext(4, {1, 1, 1, 1}, 3, 2));
  EXPECT_EQ(reduce_to_dim4(CIContext(5, {3}, 2, 3)), CIContext(4, {3, 2, 1, 1}, 2, 3));
  EXPECT_EQ(reduce_to_dim4(CIContext(4, {3, 3, 2, 2, 1}, 2, 3)).degrees().size(), 5u);
  EXPECT_THROW(reduce_to_dim4(CIContext(3, {1}, 2, 2)), UsageError);
}

TEST(CertifyCi, Examples) {
  const Certificate p4 = certify_ci(CIContext(4, {1}, 2, 2));
  EXPECT_EQ(p4.branch, Branch::kChiMismatch);
  EXPECT_EQ(p4.conclusion, Conclusion::kNonexistent);
  EXPECT_EQ(p4.witnesses.delta_chi, Rational(5, 16));
  EXPECT_EQ(p4.witnesses.v_value, Rational(1350));
  EXPECT_EQ(p4.witnesses.factor, 4320);
  ASSERT_TRUE(p4.numerics.has_value());

  // Cross-check against the polynomial identities at the all-ones point.
  AppendixWorkspace ws(2, 4);
  const std::vector<Rational> ones(4, Rational(1));
  EXPECT_EQ(*p4.witnesses.delta_chi, (ws.g() - ws.f(FVariant::kRank2Twist0)).eval(ones));
  EXPECT_EQ(*p4.witnesses.v_value, ws.v(8).eval(ones));

  const Certificate m5 = certify_ci(CIContext(5, {3}, 2, 3));
  EXPECT_EQ(m5.branch, Branch::kChiMismatch);
  EXPECT_EQ(m5.conclusion, Conclusion::kNonexistent);
  EXPECT_EQ(m5.witnesses.factor, 3840);

  for (const std::vector<long>& excluded : {std::vector<long>{2}, std::vector<long>{2, 1, 1}, std::vector<long>{2, 2}}) {
    const Certificate c = certify_ci(CIContext(4, excluded, 3, 2));
    EXPECT_EQ(c.conclusion, Conclusion::kInconclusive);
    EXPECT_EQ(c.branch, Branch::kInconclusive);
    ASSERT_FALSE(c.notes.empty());
    EXPECT_NE(c.notes.front().find("excluded type"), std::string::npos);
  }
  EXPECT_NE(certify_ci(CIContext(4, {2}, 2, 2)).notes.front().find("(2, 1, ..., 1)"), std::string::npos);
  EXPECT_EQ(certify_ci(CIContext(4, {2}, 2, 1)).branch, Branch::kRank1Interval);
  EXPECT_EQ(certify_ci(CIContext(4, {2, 2, 2}, 2, 2)).conclusion, Conclusion::kNonexistent);
}

TEST(CertifyCi, EndgameWitnessesMatchVPolynomial) {
  for (long a = 2; a <= 4; ++a)
    for (const std::vector<long>& x : {std::vector<long>{3, 1, 1, 1}, std::vector<long>{4, 3, 2, 2}, std::vector<long>{5, 5, 1, 1, 1}})
      for (long r : {2L, 3L}) {
        const Certificate c = certify_ci(CIContext(4, x, a, r));
        const Rational v = build_v(x.size(), a, r == 2 ? 8 : 9).eval(std::vector<Rational>(x.begin(), x.end()));
        EXPECT_EQ(*c.witnesses.v_value, v);
        const Integer d = std::accumulate(x.begin(), x.end(), Integer(1), [](Integer p, long q) { return p * q; });
        EXPECT_EQ(*c.witnesses.delta_chi * Rational(*c.witnesses.factor), Rational(d) * v);
      }
}

TEST(CertifyCi, Scope) {
  EXPECT_THROW(certify_ci(CIContext(3, {2}, 2, 2)), OutOfTheoremScope);
  EXPECT_THROW(certify_ci(CIContext(4, {2}, 1, 2)), OutOfTheoremScope);
  EXPECT_THROW(certify_ci(CIContext(4, {2}, 2, 4)), OutOfTheoremScope);
}

TEST(CertifyVeronese, Examples) {
  const Certificate n4 = certify_veronese(4, 3, 2);
  EXPECT_EQ(n4.conclusion, Conclusion::kNonexistent);
  EXPECT_EQ(n4.branch, Branch::kChiMismatch);
  EXPECT_EQ(n4.reduced, CIContext(4, {1, 1, 1, 1}, 3, 2));

  const Certificate five = certify_veronese(5, 2, 2);
  EXPECT_EQ(five.branch, Branch::kEs53Divisibility);
  EXPECT_EQ(five.witnesses.violated, std::vector<std::string>{"2^3 | r"});

  const Certificate seven = certify_veronese(7, 2, 3);
  EXPECT_EQ(seven.branch, Branch::kChiMismatch);
  EXPECT_EQ(seven.reduced, CIContext(4, {2, 2, 2, 1}, 2, 3));
  EXPECT_EQ(seven.input.n, 7);

  for (auto [n, a, r] : {std::tuple{3L, 2L, 2L}, std::tuple{4L, 1L, 2L}, std::tuple{5L, 2L, 4L}})
    EXPECT_THROW(certify_veronese(n, a, r), OutOfTheoremScope);
}

TEST(CertifyVeronese, Sweep) {
  for (long n = 4; n <= 8; ++n)
    for (long a = 2; a <= 5; ++a)
      for (long r = 1; r <= 3; ++r) {
        const Certificate c = certify_veronese(n, a, r);
        EXPECT_EQ(c.conclusion, Conclusion::kNonexistent);
        if (c.branch == Branch::kChiMismatch) {
          EXPECT_EQ(*c.witnesses.delta_chi * Rational(*c.witnesses.factor),
                    Rational(c.reduced->profile().d()) * *c.witnesses.v_value);
          EXPECT_GT(c.witnesses.v_value->sign(), 0);
        }
        EXPECT_TRUE(replay_matches(c));
      }
}

TEST(Certificates, PaddingInvariance) {
  for (long a = 2; a <= 3; ++a)
    for (long r = 1; r <= 3; ++r)
      for (const std::vector<long>& x : {std::vector<long>{3}, std::vector<long>{4, 2}, std::vector<long>{1}}) {
        const Certificate plain = certify_ci(CIContext(4, x, a, r));
        for (int extra = 1; extra <= 3; ++extra) {
          std::vector<long> padded = x;
          padded.insert(padded.end(), static_cast<std::size_t>(extra), 1);
          EXPECT_TRUE(same_outcome(plain, certify_ci(CIContext(4, padded, a, r))));
        }
      }
}

TEST(Certificates, ReplayDetectsTampering) {
  Certificate c = certify_ci(CIContext(4, {3, 2}, 2, 2));
  EXPECT_TRUE(replay_matches(c));
  c.witnesses.v_value = *c.witnesses.v_value + Rational(1);
  EXPECT_FALSE(replay_matches(c));
  EXPECT_FALSE(same_outcome(c, replay(c)));
}

TEST(Names, Stable) {
  EXPECT_EQ(branch_name(Branch::kEs53Divisibility), "es53-divisibility");
  EXPECT_EQ(branch_name(Branch::kRank1Interval), "rank1-interval");
  EXPECT_EQ(conclusion_name(Conclusion::kNonexistent), "NONEXISTENT");
}

}  // namespace
}  // namespace ulrich
