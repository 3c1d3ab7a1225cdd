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

#ifndef ULRICH_APPENDIX_HPP
#define ULRICH_APPENDIX_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ulrich/partition.hpp"
#include "ulrich/rational.hpp"
#include "ulrich/sparse_poly.hpp"
#include "ulrich/symmetric.hpp"

namespace ulrich {

/// The three Euler characteristic polynomials f_{a,4,s,r,l} that the
/// fourfold argument needs: (r, l) = (2, 0), (3, 0), (3, 1).
enum class FVariant { kRank2Twist0, kRank3Twist0, kRank3Twist1 };

inline constexpr std::array<FVariant, 3> kAllFVariants = {
    FVariant::kRank2Twist0, FVariant::kRank3Twist0, FVariant::kRank3Twist1};

long variant_rank(FVariant v);
long variant_twist(FVariant v);
/// "r2l0", "r3l0", "r3l1".
std::string variant_name(FVariant v);
FVariant parse_variant(const std::string& name);

/// Functions of the degree tuple built from f and the surface invariants.
enum class SymFunction { kG, kDelta, kH, kK, kC, kChiPrime };

inline constexpr std::array<SymFunction, 6> kAllSymFunctions = {
    SymFunction::kG, SymFunction::kDelta, SymFunction::kH,
    SymFunction::kK, SymFunction::kC,     SymFunction::kChiPrime};

/// "g", "delta", "h", "k", "c", "chi_prime".
std::string sym_function_name(SymFunction f);

/// The symmetric monomial basis of degree <= 4, in the order
/// m_4, m_31, m_22, m_211, m_1111, m_3, m_21, m_111, m_2, m_11, m_1, 1.
const std::array<Partition, 12>& degree4_basis();

/// Printed closed form f = m_{1^s}/M * sum_i coeffs[i] * basis[i].
struct CoeffTable {
  Rational M;
  std::array<Rational, 12> coeffs;
};

/// Closed-form coefficient table of f / m_{1^s} for s >= 4.
CoeffTable f_coefficient_table(FVariant variant, long a, long s);

/// The s = 4 expansion of f, printed with coefficients polynomial in a.
CoeffTable f_s4_display(FVariant variant, long a);

/// Printed monomial-basis expansion of each symmetric function divided by
/// m_{1^s}, prefactors included. Partitions longer than s are dropped.
BasisExpr printed_expansion(SymFunction f, long a, std::size_t s);

/// Lazily built polynomials for one (a, s). Not thread-safe; use one
/// workspace per thread.
class AppendixWorkspace {
 public:
  AppendixWorkspace(long a, std::size_t s);

  long a() const noexcept { return a_; }
  std::size_t s() const noexcept { return s_; }

  const SparsePoly& f(FVariant variant);
  const SparsePoly& g();
  const SparsePoly& delta();
  const SparsePoly& h();
  const SparsePoly& k();
  const SparsePoly& c();
  const SparsePoly& chi_prime();
  const SparsePoly& v(long b);
  const SparsePoly& get(SymFunction f);

  /// m_{1^s}(s) = x_1 ... x_s.
  SparsePoly all_vars_product() const;

 private:
  SparsePoly m(const Partition& lambda) const;
  SparsePoly m1() const;
  SparsePoly m11() const;

  long a_;
  std::size_t s_;
  std::map<FVariant, SparsePoly> f_;
  std::optional<SparsePoly> g_, delta_, h_, k_, c_, chi_prime_;
  std::map<long, SparsePoly> v_;
};

SparsePoly build_g(long a, std::size_t s);
SparsePoly build_delta(long a, std::size_t s);
SparsePoly build_h(long a, std::size_t s);
SparsePoly build_k(long a, std::size_t s);
SparsePoly build_c(long a, std::size_t s);
SparsePoly build_chi_prime(long a, std::size_t s);

/// v_{s,a,b} = b m_4 + 10 m_22 + (50a^2 - 10s - 50) m_2 - 250a^2 - 50a^2 s
///             + 5s^2 + 150 + (55 - b)s - 5b + (100 + 5b)a^4
SparsePoly build_v(std::size_t s, long a, long b);

struct Residual {
  std::string element;
  Rational value;
  friend bool operator==(const Residual&, const Residual&) = default;
};

struct VerificationReport {
  std::string lemma;
  std::vector<std::pair<std::string, std::string>> parameters;
  bool pass = false;
  std::vector<Residual> residuals;
  std::vector<std::string> notes;

  std::string status() const { return pass ? "pass" : "fail"; }
};

/// Positivity data for v_{s,a,b} on the grid {1..d_max}^s.
struct VReport {
  long s = 0;
  long a = 0;
  long b = 0;
  std::map<std::vector<long>, Rational> values;
  bool recursion_checked = false;  // exact polynomial recursion in a (a >= 2)
  bool base_checked = false;       // a = 1: >= 0 with equality only at all-ones
  bool ones_value_checked = false; // value at all-ones matches the closed form
  bool positive = false;           // strictly positive on the whole grid
  Rational min_value;
  std::vector<long> min_witness;
};

/// Builds f, divides by x_1...x_s, rewrites in the monomial basis and
/// compares with the closed-form table. Requires s >= 4.
VerificationReport check_f_table(AppendixWorkspace& ws, FVariant variant);
VerificationReport check_f_table(long a, std::size_t s, FVariant variant);

/// Same comparison at s = 4 against the display with coefficients in a.
VerificationReport check_f_s4_display(AppendixWorkspace& ws, FVariant variant);

/// Each of g, delta, h, k, c, chi' against its printed basis expansion.
VerificationReport check_expansions(AppendixWorkspace& ws);
VerificationReport check_expansions(long a, std::size_t s);

/// g - f_{r2l0} = m_{1^s}/4320 v_{s,a,8} and chi' - f_{r3l0} = m_{1^s}/3840 v_{s,a,9}
/// as exact polynomial identities. Requires s >= 4.
VerificationReport check_difference_identities(AppendixWorkspace& ws);
VerificationReport check_difference_identities(long a, std::size_t s);

/// Symmetry, divisibility by every variable, and compatibility with setting
/// trailing variables to 1, for f_{a,m,s,r,l}. Requires s >= 2.
VerificationReport check_f_structure(long a, long m, std::size_t s, long r, long ell);
/// The same checks on a caller-supplied polynomial standing in for f.
VerificationReport check_f_structure_of(const SparsePoly& f, long a, long m, long r, long ell);

/// Recursion, base case and positivity of v_{s,a,b} for 2 <= s <= s_max,
/// 1 <= a <= a_max, b in {8, 9}, degrees in {1..d_max}. Throws
/// VerificationFailure on the first violation.
std::vector<VReport> check_v_positivity(long s_max, long a_max, long d_max);

}  // namespace ulrich

#endif  // ULRICH_APPENDIX_HPP
