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

#include "ulrich/invariants.hpp"

#include <algorithm>
#include <functional>

#include "ulrich/binomial.hpp"
#include "ulrich/errors.hpp"

namespace ulrich {

namespace {

std::vector<long> sorted_desc(std::vector<long> degrees) {
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return degrees;
}

}  // namespace

CIContext::CIContext(long m, std::vector<long> degrees, long a, long r)
    : profile_(m, sorted_desc(std::move(degrees)), a, r) {}

CIContext::CIContext(const ChiProfile& profile)
    : CIContext(profile.m(), profile.degrees(), profile.a(), profile.r()) {}

Rational canonical_coeff(const CIContext& ctx) {
  const auto& p = ctx.profile();
  return Rational(p.S()) - Rational(static_cast<long>(p.s()) + p.m() + 1);
}

Rational c2X_coeff(const CIContext& ctx) {
  const auto& p = ctx.profile();
  const long ambient = p.m() + static_cast<long>(p.s());
  return binom_int(Integer(ambient + 1), 2) + Rational(p.S()) * canonical_coeff(ctx) - Rational(p.S_prime());
}

Rational u_coeff(const CIContext& ctx) {
  const auto& p = ctx.profile();
  if (p.r() < 1) throw UsageError("rank must be positive");
  return Rational(p.r(), 2) *
         (Rational((p.m() + 1) * (p.a() - 1) - static_cast<long>(p.s())) + Rational(p.S()));
}

namespace {

// The bracket shared by the closed formulas for deg_H(Z) (times r d / 24)
// and e (times r / 24).
Rational degree_bracket(const CIContext& ctx) {
  const auto& p = ctx.profile();
  const Integer a(p.a());
  const Integer m(p.m());
  const Integer r(p.r());
  const Integer s(static_cast<long>(p.s()));
  const Integer& S = p.S();
  const Integer& Sp = p.S_prime();
  Integer b = -4 + 6 * a - 2 * a * a - 7 * m + 12 * a * m - 5 * a * a * m - 3 * m * m + 6 * a * m * m -
              3 * a * a * m * m + 3 * r - 6 * a * r + 3 * a * a * r;
  b += 6 * m * r - 12 * a * m * r + 6 * a * a * m * r + 3 * m * m * r - 6 * a * m * m * r +
       3 * a * a * m * m * r - 7 * s + 6 * a * s - 6 * m * s + 6 * a * m * s;
  b += 6 * r * s - 6 * a * r * s + 6 * m * r * s - 6 * a * m * r * s - 3 * s * s + 3 * r * s * s + 6 * S -
       6 * a * S + 6 * m * S - 6 * a * m * S - 6 * r * S;
  b += 6 * a * r * S - 6 * m * r * S + 6 * a * m * r * S + 6 * s * S - 6 * r * s * S - 2 * S * S +
       3 * r * S * S - 2 * Sp;
  return Rational(b);
}

}  // namespace

Rational e_coeff(const CIContext& ctx) { return Rational(ctx.r(), 24) * degree_bracket(ctx); }

Rational degZ(const CIContext& ctx) {
  return Rational(ctx.r(), 24) * Rational(ctx.profile().d()) * degree_bracket(ctx);
}

Rational degZ_via_chern(const CIContext& ctx) {
  const auto& p = ctx.profile();
  if (p.m() < 2) throw UsageError("the Chern class route needs m >= 2");
  const Rational u = u_coeff(ctx);
  const Rational k = canonical_coeff(ctx);
  const Rational c2 = c2X_coeff(ctx);
  const Rational a(p.a());
  const Rational m(p.m());
  // c_2(E).L^{m-2} with c_1 = uH, K_X = kH, L = aH, H^m = d.
  const Rational l_power = pow(a, static_cast<unsigned>(p.m() - 2));
  const Rational first = Rational(1, 2) * (u * u - u * k);
  const Rational second = Rational(p.r(), 12) *
                          (k * k + c2 - (Rational(3) * m * m + Rational(5) * m + Rational(2)) / Rational(2) * a * a);
  const Rational c2E_dot_L = (first + second) * l_power * Rational(p.d());
  return c2E_dot_L / l_power;
}

namespace {

void require_fourfold(const CIContext& ctx, long rank, const char* chain) {
  if (ctx.m() != 4 || ctx.r() != rank) {
    throw UsageError(std::string(chain) + " needs m = 4 and r = " + std::to_string(rank) + " (got m = " +
                     std::to_string(ctx.m()) + ", r = " + std::to_string(ctx.r()) + ")");
  }
}

UlrichNumerics common_numerics(const CIContext& ctx) {
  UlrichNumerics out;
  out.u = u_coeff(ctx);
  out.e = e_coeff(ctx);
  out.degZ = degZ(ctx);
  out.kX = canonical_coeff(ctx);
  out.c2X = c2X_coeff(ctx);
  out.chiZ_rr = chi_Z(Rational(0), ctx.profile(), out.u);
  return out;
}

}  // namespace

UlrichNumerics r2_chain(const CIContext& ctx) {
  require_fourfold(ctx, 2, "r2_chain");
  UlrichNumerics out = common_numerics(ctx);
  // omega_Z = O_Z(K_X + D) with D = c_1(E).
  const Rational kz = out.kX + out.u;
  out.kZ = kz;
  out.kZH = kz * out.degZ;
  out.kZ2 = kz * kz * out.degZ;
  // c_2(Z) = c_2(X)|Z - c_2(E)|Z + K_Z^2 - K_Z.K_X|Z
  out.c2Z = (out.c2X - out.e) * out.degZ + out.kZ2 - kz * out.kX * out.degZ;
  out.chiZ_noether = (out.kZ2 + out.c2Z) / Rational(12);
  return out;
}

UlrichNumerics r3_chain(const CIContext& ctx) {
  require_fourfold(ctx, 3, "r3_chain");
  UlrichNumerics out = common_numerics(ctx);
  const Rational chi1 = chi_Z(Rational(1), ctx.profile(), out.u);
  // Riemann-Roch on the surface Z: chi(O_Z(1)) = chi(O_Z) + (H_Z^2 - K_Z.H_Z)/2.
  out.kZH = Rational(-2) * chi1 + Rational(2) * out.chiZ_rr + out.degZ;
  // [K_Z - (5/2) t H_Z]^2 = 0 with t = S - s + 3a - 5.
  const auto& p = ctx.profile();
  const Rational t = Rational(p.S()) - Rational(static_cast<long>(p.s())) + Rational(3 * p.a() - 5);
  out.kZ2 = Rational(5) * t * out.kZH - Rational(25, 4) * t * t * out.degZ;
  // c_2(Z) = c_2(X)|Z - c_2(E)|Z - c_1(E)^2|Z + K_Z.K_X|Z - K_X^2|Z
  //          + 2 K_Z.c_1(E)|Z - 2 K_X.c_1(E)|Z
  out.c2Z = (out.c2X - out.e - out.u * out.u - out.kX * out.kX - Rational(2) * out.kX * out.u) * out.degZ +
            (out.kX + Rational(2) * out.u) * out.kZH;
  out.chiZ_noether = (out.kZ2 + out.c2Z) / Rational(12);
  return out;
}

}  // namespace ulrich
