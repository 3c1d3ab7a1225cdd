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

#ifndef ULRICH_INVARIANTS_HPP
#define ULRICH_INVARIANTS_HPP

#include <optional>
#include <vector>

#include "ulrich/euler.hpp"
#include "ulrich/rational.hpp"

namespace ulrich {

/// A complete intersection X in P^{m+s} with an assumed rank r Ulrich bundle
/// for O_X(a). Degrees are kept sorted descending. Divisor and cycle classes
/// are scalars in the basis H^k, with H^m = d.
class CIContext {
 public:
  CIContext(long m, std::vector<long> degrees, long a, long r);
  explicit CIContext(const ChiProfile& profile);

  const ChiProfile& profile() const noexcept { return profile_; }
  long m() const noexcept { return profile_.m(); }
  long a() const noexcept { return profile_.a(); }
  long r() const noexcept { return profile_.r(); }
  std::size_t s() const noexcept { return profile_.s(); }
  const std::vector<long>& degrees() const noexcept { return profile_.degrees(); }

  friend bool operator==(const CIContext&, const CIContext&) = default;

 private:
  ChiProfile profile_;
};

/// Numerical invariants of the Ulrich subvariety Z (a surface when m = 4).
/// Divisor coefficients are multiples of H or H^2; degZ = [Z].H^{m-2}.
struct UlrichNumerics {
  Rational u;
  Rational e;
  Rational degZ;
  Rational kX;
  Rational c2X;
  std::optional<Rational> kZ;  // K_Z = kZ * H_Z, known for r = 2 only
  Rational kZH;                // K_Z . H_Z
  Rational kZ2;
  Rational c2Z;
  Rational chiZ_noether;       // (K_Z^2 + c_2(Z)) / 12
  Rational chiZ_rr;            // chi(O_Z) from the Koszul computation

  friend bool operator==(const UlrichNumerics&, const UlrichNumerics&) = default;
};

/// K_X = (S - s - m - 1) H.
Rational canonical_coeff(const CIContext& ctx);

/// c_2(X) = [binom(m+s+1, 2) + S(S - s - m - 1) - S'] H^2.
Rational c2X_coeff(const CIContext& ctx);

/// c_1(E) = u H with u = (r/2)[(m+1)(a-1) + S - s].
Rational u_coeff(const CIContext& ctx);

/// c_2(E) = e H^2 (valid under the Picard and H^4 hypotheses the caller attests).
Rational e_coeff(const CIContext& ctx);

/// deg_H(Z) from the closed formula in (m, a, r, s, S, S').
Rational degZ(const CIContext& ctx);

/// deg_H(Z) from the Riemann-Roch expression for c_2(E).L^{m-2} with L = aH,
/// divided by a^{m-2}.
Rational degZ_via_chern(const CIContext& ctx);

/// The rank 2 chain on a fourfold: K_Z = (K_X + c_1(E))|_Z and Noether's formula.
UlrichNumerics r2_chain(const CIContext& ctx);

/// The rank 3 chain on a fourfold: K_Z.H_Z from Riemann-Roch on Z, then K_Z^2
/// from the vanishing self-intersection, then Noether's formula.
UlrichNumerics r3_chain(const CIContext& ctx);

}  // namespace ulrich

#endif  // ULRICH_INVARIANTS_HPP
