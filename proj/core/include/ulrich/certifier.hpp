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

#ifndef ULRICH_CERTIFIER_HPP
#define ULRICH_CERTIFIER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ulrich/invariants.hpp"
#include "ulrich/rational.hpp"

namespace ulrich {

enum class Branch { kRank1Interval, kEs53Divisibility, kCnecIntegrality, kChiMismatch, kInconclusive };
enum class Conclusion { kNonexistent, kInconclusive };

/// "rank1-interval", "es53-divisibility", "cnec-integrality", "chi-mismatch", "inconclusive".
std::string branch_name(Branch b);
/// "NONEXISTENT", "INCONCLUSIVE".
std::string conclusion_name(Conclusion c);

/// A prime p | a with p^t || n! where p^t does not divide r.
struct DivisibilityViolation {
  long p = 0;
  long t = 0;
  std::string text() const { return std::to_string(p) + "^" + std::to_string(t) + " | r"; }
  friend bool operator==(const DivisibilityViolation&, const DivisibilityViolation&) = default;
};

/// Necessary condition for a rank r Ulrich bundle on (P^n, O(a)): for every
/// prime p | a, p^{v_p(n!)} | r. Returns the violated constraints.
std::vector<DivisibilityViolation> es53_check(long n, long a, long r);

/// True iff r (l + a)(l + 2a)...(l + na) / n! is an integer for every integer
/// l; decided on l = 0..n, which suffices for a degree n polynomial.
bool cnec_check(long n, long a, long r);

/// What was certified: either a Veronese (n, a, r) or a complete
/// intersection (m, degrees, a, r).
struct CertificateInput {
  std::optional<long> n;
  long m = 0;
  std::vector<long> degrees;
  long a = 0;
  long r = 0;
  friend bool operator==(const CertificateInput&, const CertificateInput&) = default;
};

struct Witnesses {
  std::optional<Rational> delta_chi;  // chi_Noether(O_Z) - chi(O_Z)
  std::optional<Rational> v_value;    // v_{s,a,8|9}(degrees)
  std::optional<long> factor;         // 4320 (r = 2) or 3840 (r = 3)
  std::optional<std::pair<Integer, Integer>> interval;  // [lower, upper] for c_1 of a line bundle
  std::vector<std::string> violated;
  friend bool operator==(const Witnesses&, const Witnesses&) = default;
};

struct Certificate {
  CertificateInput input;
  Branch branch = Branch::kInconclusive;
  Witnesses witnesses;
  std::vector<std::string> hypotheses_attested;
  Conclusion conclusion = Conclusion::kInconclusive;
  std::optional<CIContext> reduced;  // the fourfold the chi computation ran on
  std::optional<UlrichNumerics> numerics;
  std::vector<std::string> notes;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// r = 1: c_1(E) = bH forces m(a-1) + S - s <= b <= a - 1.
Certificate rank1_certificate(const CIContext& ctx);

/// Cuts an m-fold down to a fourfold by m - 4 hyperplane sections of O(a),
/// i.e. appends m - 4 copies of a, then pads with 1's to at least 4 degrees.
CIContext reduce_to_dim4(const CIContext& ctx);

/// v_{s,a,b}(d_1..d_s) evaluated directly from power sums.
Rational v_value(const std::vector<long>& degrees, long a, long b);

/// Non-existence certificate for rank r <= 3 Ulrich bundles on a smooth
/// m-fold complete intersection, m >= 4, with respect to O_X(a).
Certificate certify_ci(const CIContext& ctx);

/// Non-existence certificate for (P^n, O(a)), n >= 4, a >= 2, r <= 3.
Certificate certify_veronese(long n, long a, long r);

/// Recomputes a certificate from its input alone.
Certificate replay(const Certificate& cert);
bool replay_matches(const Certificate& cert);

/// Equal branch, witnesses and conclusion; inputs and reductions may differ.
bool same_outcome(const Certificate& x, const Certificate& y);

}  // namespace ulrich

#endif  // ULRICH_CERTIFIER_HPP
