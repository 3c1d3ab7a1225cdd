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

// Closed forms as printed, coefficients polynomial in a and s. These are the
// values the expansions are checked against, so they are transcribed
// literally rather than simplified.

#include <array>

#include "ulrich/appendix.hpp"
#include "ulrich/errors.hpp"

namespace ulrich {

const std::array<Partition, 12>& degree4_basis() {
  static const std::array<Partition, 12> basis = {
      Partition{4},    Partition{3, 1},    Partition{2, 2}, Partition{2, 1, 1},
      Partition{1, 1, 1, 1}, Partition{3}, Partition{2, 1}, Partition{1, 1, 1},
      Partition{2},    Partition{1, 1},    Partition{1},    Partition{}};
  return basis;
}

namespace {

using Z = Integer;

std::array<Rational, 12> to_rationals(const std::array<Z, 12>& values, const Rational& scale = Rational(1)) {
  std::array<Rational, 12> out;
  for (std::size_t i = 0; i < 12; ++i) out[i] = Rational(values[i]) * scale;
  return out;
}

CoeffTable rank2_table(const Z& a, const Z& s) {
  CoeffTable t;
  t.M = Rational(360);
  t.coeffs = to_rationals({Z(66), Z(225), Z(320), Z(600), Z(1125),
                           75 * (-15 + 11 * a - 3 * s),
                           150 * (-20 + 15 * a - 4 * s),
                           225 * (-25 + 19 * a - 5 * s),
                           10 * (740 - 1125 * a + 420 * a * a + 298 * s - 225 * a * s + 30 * s * s),
                           Z(0), Z(0), Z(0)});
  t.coeffs[9] = Rational(75, 2) * Rational(Z(370 - 570 * a + 214 * a * a + 149 * s - 114 * a * s + 15 * s * s));
  t.coeffs[10] = Rational(75, 2) * Rational(Z(-600 + 1410 * a - 1070 * a * a + 260 * a * a * a - 365 * s +
                                              567 * a * s - 214 * a * a * s - 74 * s * s + 57 * a * s * s -
                                              5 * s * s * s));
  const Z a2 = a * a, a3 = a2 * a, a4 = a3 * a, s2 = s * s, s3 = s2 * s, s4 = s3 * s;
  t.coeffs[11] = Rational(1, 8) *
                 Rational(Z(215760 - 690000 * a + 795000 * a2 - 390000 * a3 + 69240 * a4 + 176302 * s -
                            418500 * a * s + 319500 * a2 * s - 78000 * a3 * s + 54005 * s2 - 84600 * a * s2 +
                            32100 * a2 * s2 + 7350 * s3 - 5700 * a * s3 + 375 * s4));
  return t;
}

CoeffTable rank3_twist0_table(const Z& a, const Z& s) {
  const Z a2 = a * a, a3 = a2 * a, a4 = a3 * a, s2 = s * s, s3 = s2 * s, s4 = s3 * s;
  CoeffTable t;
  t.M = Rational(1920);
  t.coeffs = to_rationals({
      Z(1683), Z(6060), Z(8770), Z(16860), Z(32400),
      -30300 + 24600 * a - 6060 * s,
      -84300 + 69000 * a - 16860 * s,
      -162000 + 133200 * a - 32400 * s,
      209050 - 345000 * a + 140850 * a2 + 83960 * s - 69000 * a * s + 8430 * s2,
      401700 - 666000 * a + 272700 * a2 + 161340 * s - 133200 * a * s + 16200 * s2,
      -658500 + 1653000 * a - 1363500 * a2 + 369000 * a3 - 398400 * s + 663600 * a * s - 272700 * a2 * s -
          80340 * s2 + 66600 * a * s2 - 5400 * s3,
      802635 - 2715000 * a + 3386250 * a2 - 1845000 * a3 + 371115 * a4 + 650302 * s - 1641000 * a * s +
          1359000 * a2 * s - 369000 * a3 * s + 197555 * s2 - 330600 * a * s2 + 136350 * a2 * s2 + 26670 * s3 -
          22200 * a * s3 + 1350 * s4});
  return t;
}

CoeffTable rank3_twist1_table(const Z& a, const Z& s) {
  const Z a2 = a * a, a3 = a2 * a, a4 = a3 * a, s2 = s * s, s3 = s2 * s, s4 = s3 * s;
  CoeffTable t;
  t.M = Rational(1920);
  t.coeffs = to_rationals({
      Z(1683), Z(6060), Z(8770), Z(16860), Z(32400),
      -32580 + 24600 * a - 6060 * s,
      -90420 + 69000 * a - 16860 * s,
      -173520 + 133200 * a - 32400 * s,
      240490 - 371400 * a + 140850 * a2 + 90080 * s - 69000 * a * s + 8430 * s2,
      460740 - 716400 * a + 272700 * a2 + 172860 * s - 133200 * a * s + 16200 * s2,
      -807900 + 1912200 * a - 1473300 * a2 + 369000 * a3 - 457080 * s + 714000 * a * s - 272700 * a2 * s -
          86100 * s2 + 66600 * a * s2 - 5400 * s3,
      1051035 - 3375000 * a + 3953850 * a2 - 2001000 * a3 + 371115 * a4 + 797782 * s - 1899000 * a * s +
          1468800 * a2 * s - 369000 * a3 * s + 226715 * s2 - 355800 * a * s2 + 136350 * a2 * s2 + 28590 * s3 -
          22200 * a * s3 + 1350 * s4});
  return t;
}

}  // namespace

CoeffTable f_coefficient_table(FVariant variant, long a, long s) {
  if (s < 4) throw UsageError("the coefficient tables hold for s >= 4 only (s = " + std::to_string(s) + ")");
  const Z za(a), zs(s);
  switch (variant) {
    case FVariant::kRank2Twist0: return rank2_table(za, zs);
    case FVariant::kRank3Twist0: return rank3_twist0_table(za, zs);
    case FVariant::kRank3Twist1: return rank3_twist1_table(za, zs);
  }
  throw UsageError("unknown variant");
}

CoeffTable f_s4_display(FVariant variant, long a_value) {
  const Z a(a_value);
  const Z a2 = a * a, a3 = a2 * a, a4 = a3 * a;
  CoeffTable t;
  switch (variant) {
    case FVariant::kRank2Twist0:
      t.M = Rational(360);
      t.coeffs = to_rationals({Z(66), Z(225), Z(320), Z(600), Z(1125),
                               825 * a - 2025,
                               2250 * a - 5400,
                               4275 * a - 10125,
                               4200 * a2 - 20250 * a + 24120,
                               8025 * a2 - 38475 * a + 45225,
                               9750 * a3 - 72225 * a2 + 172125 * a - 133650,
                               8655 * a4 - 87750 * a3 + 323325 * a2 - 510300 * a + 293931});
      return t;
    case FVariant::kRank3Twist0:
      t.M = Rational(1920);
      t.coeffs = to_rationals({Z(1683), Z(6060), Z(8770), Z(16860), Z(32400),
                               -54540 + 24600 * a,
                               -151740 + 69000 * a,
                               -291600 + 133200 * a,
                               679770 - 621000 * a + 140850 * a2,
                               1306260 - 1198800 * a + 272700 * a2,
                               -3883140 + 5373000 * a - 2454300 * a2 + 369000 * a3,
                               8617203 - 15989400 * a + 11003850 * a2 - 3321000 * a3 + 371115 * a4});
      return t;
    case FVariant::kRank3Twist1:
      t.M = Rational(1920);
      t.coeffs = to_rationals({Z(1683), Z(6060), Z(8770), Z(16860), Z(32400),
                               -56820 + 24600 * a,
                               -157860 + 69000 * a,
                               -303120 + 133200 * a,
                               735690 - 647400 * a + 140850 * a2,
                               1411380 - 1249200 * a + 272700 * a2,
                               -4359420 + 5833800 * a - 2564100 * a2 + 369000 * a3,
                               10044963 - 18084600 * a + 12010650 * a2 - 3477000 * a3 + 371115 * a4});
      return t;
  }
  throw UsageError("unknown variant");
}

namespace {

BasisExpr from_coeffs(std::size_t s, const Rational& prefactor, const std::array<Z, 12>& coeffs) {
  BasisExpr out(s);
  const auto& basis = degree4_basis();
  for (std::size_t i = 0; i < 12; ++i) out.add(basis[i], prefactor * Rational(coeffs[i]));
  return out;
}

}  // namespace

BasisExpr printed_expansion(SymFunction f, long a_value, std::size_t s_value) {
  const Z a(a_value);
  const Z s(static_cast<long>(s_value));
  const Z a2 = a * a, a3 = a2 * a, a4 = a3 * a, s2 = s * s, s3 = s2 * s, s4 = s3 * s;
  switch (f) {
    case SymFunction::kG:
      return from_coeffs(s_value, Rational(5, 1728),
                         {Z(64), Z(216), Z(308), Z(576), Z(1080),
                          -1080 + 792 * a - 216 * s,
                          -2880 + 2160 * a - 576 * s,
                          -5400 + 4104 * a - 1080 * s,
                          7100 - 10800 * a + 4036 * a2 + 2860 * s - 2160 * a * s + 288 * s2,
                          13320 - 20520 * a + 7704 * a2 + 5364 * s - 4104 * a * s + 540 * s2,
                          -21600 + 50760 * a - 38520 * a2 + 9360 * a3 - 13140 * s + 20412 * a * s -
                              7704 * a2 * s - 2664 * s2 + 2052 * a * s2 - 180 * s3,
                          25900 - 82800 * a + 95380 * a2 - 46800 * a3 + 8320 * a4 + 21160 * s - 50220 * a * s +
                              38336 * a2 * s - 9360 * a3 * s + 6481 * s2 - 10152 * a * s2 + 3852 * a2 * s2 +
                              882 * s3 - 684 * a * s3 + 45 * s4});
    case SymFunction::kDelta:
      return from_coeffs(s_value, Rational(1, 8),
                         {Z(0), Z(0), Z(0), Z(0), Z(0), Z(0), Z(0), Z(0),
                          Z(7), Z(12),
                          -60 + 60 * a - 12 * s,
                          145 - 300 * a + 155 * a2 + 59 * s - 60 * a * s + 6 * s2});
    case SymFunction::kH:
      return from_coeffs(s_value, Rational(1, 8),
                         {Z(0), Z(0), Z(0), Z(0), Z(0),
                          Z(19), Z(51), Z(96),
                          -255 + 220 * a - 51 * s,
                          -480 + 420 * a - 96 * s,
                          1185 - 2100 * a + 915 * a2 + 477 * s - 420 * a * s + 48 * s2,
                          -1925 + 5200 * a - 4575 * a2 + 1300 * a3 - 1170 * s + 2090 * a * s - 915 * a2 * s -
                              237 * s2 + 210 * a * s2 - 16 * s3});
    case SymFunction::kK:
      return from_coeffs(s_value, Rational(5, 32),
                         {Z(41), Z(150), Z(218), Z(422), Z(816),
                          -750 + 598 * a - 150 * s,
                          -2110 + 1702 * a - 422 * s,
                          -4080 + 3312 * a - 816 * s,
                          5240 - 8510 * a + 3410 * a2 + 2103 * s - 1702 * a * s + 211 * s2,
                          10130 - 16560 * a + 6670 * a2 + 4066 * s - 3312 * a * s + 408 * s2,
                          -16650 + 41170 * a - 33350 * a2 + 8830 * a3 - 10060 * s + 16514 * a * s -
                              6670 * a2 * s - 2026 * s2 + 1656 * a * s2 - 136 * s3,
                          20375 - 67850 * a + 83000 * a2 - 44150 * a3 + 8625 * a4 + 16475 * s - 40940 * a * s +
                              33275 * a2 * s - 8830 * a3 * s + 4995 * s2 - 8234 * a * s2 + 3335 * a2 * s2 +
                              673 * s3 - 552 * a * s3 + 34 * s4});
    case SymFunction::kC:
      return from_coeffs(s_value, Rational(1, 64),
                         {Z(265), Z(924), Z(1330), Z(2524), Z(4800),
                          -4620 + 3860 * a - 924 * s,
                          -12620 + 10580 * a - 2524 * s,
                          -24000 + 20160 * a - 4800 * s,
                          31210 - 52900 * a + 22250 * a2 + 12552 * s - 10580 * a * s + 1262 * s2,
                          59380 - 100800 * a + 42380 * a2 + 23876 * s - 20160 * a * s + 2400 * s2,
                          -96900 + 249500 * a - 211900 * a2 + 59300 * a3 - 58760 * s + 100300 * a * s -
                              42380 * a2 * s - 11876 * s2 + 10080 * a * s2 - 800 * s3,
                          117325 - 407500 * a + 524450 * a2 - 296500 * a3 + 62225 * a4 + 95380 * s -
                              247000 * a * s + 210840 * a2 * s - 59300 * a3 * s + 29073 * s2 - 49900 * a * s2 +
                              21190 * a2 * s2 + 3938 * s3 - 3360 * a * s3 + 200 * s4});
    case SymFunction::kChiPrime:
      return from_coeffs(s_value, Rational(1, 768),
                         {Z(675), Z(2424), Z(3510), Z(6744), Z(12960),
                          -12120 + 9840 * a - 2424 * s,
                          -33720 + 27600 * a - 6744 * s,
                          -64800 + 53280 * a - 12960 * s,
                          83610 - 138000 * a + 56350 * a2 + 33582 * s - 27600 * a * s + 3372 * s2,
                          160680 - 266400 * a + 109080 * a2 + 64536 * s - 53280 * a * s + 6480 * s2,
                          -263400 + 661200 * a - 545400 * a2 + 147600 * a3 - 159360 * s + 265440 * a * s -
                              109080 * a2 * s - 32136 * s2 + 26640 * a * s2 - 2160 * s3,
                          321075 - 1086000 * a + 1354450 * a2 - 738000 * a3 + 148475 * a4 + 260130 * s -
                              656400 * a * s + 543590 * a2 * s - 147600 * a3 * s + 79023 * s2 - 132240 * a * s2 +
                              54540 * a2 * s2 + 10668 * s3 - 8880 * a * s3 + 540 * s4});
  }
  throw UsageError("unknown symmetric function");
}

}  // namespace ulrich
