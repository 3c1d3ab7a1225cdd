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

#include "ulrich/certifier.hpp"

#include <algorithm>

#include "ulrich/errors.hpp"
#include "ulrich/euler.hpp"

namespace ulrich {

std::string branch_name(Branch b) {
  switch (b) {
    case Branch::kRank1Interval: return "rank1-interval";
    case Branch::kEs53Divisibility: return "es53-divisibility";
    case Branch::kCnecIntegrality: return "cnec-integrality";
    case Branch::kChiMismatch: return "chi-mismatch";
    case Branch::kInconclusive: return "inconclusive";
  }
  return "?";
}

std::string conclusion_name(Conclusion c) {
  return c == Conclusion::kNonexistent ? "NONEXISTENT" : "INCONCLUSIVE";
}

namespace {

std::vector<long> prime_divisors(long a) {
  std::vector<long> out;
  for (long p = 2; p * p <= a; ++p) {
    if (a % p != 0) continue;
    out.push_back(p);
    while (a % p == 0) a /= p;
  }
  if (a > 1) out.push_back(a);
  return out;
}

// Legendre: v_p(n!) = sum_k floor(n / p^k).
long factorial_valuation(long n, long p) {
  long t = 0;
  for (long q = n / p; q > 0; q /= p) t += q;
  return t;
}

CertificateInput ci_input(const CIContext& ctx) { return {std::nullopt, ctx.m(), ctx.degrees(), ctx.a(), ctx.r()}; }

bool is_excluded_type(const std::vector<long>& sorted_degrees) {
  long twos = 0;
  for (long d : sorted_degrees) {
    if (d == 2) ++twos;
    else if (d != 1) return false;
  }
  return twos == 1 || twos == 2;
}

void attest_ci_hypotheses(const CIContext& ctx, Certificate& cert) {
  cert.hypotheses_attested.emplace_back("X is a smooth complete intersection");
  if (ctx.m() >= 5) {
    cert.hypotheses_attested.emplace_back("m >= 5");
  } else if (ctx.profile().d() == 1) {
    cert.hypotheses_attested.emplace_back("m = 4 and d = 1");
  } else {
    cert.hypotheses_attested.emplace_back("m = 4, d >= 2 and X very general");
    cert.hypotheses_attested.emplace_back("type not (2, 1, ..., 1) or (2, 2, 1, ..., 1)");
  }
}

}  // namespace

std::vector<DivisibilityViolation> es53_check(long n, long a, long r) {
  if (n < 1 || a < 1 || r < 1) throw UsageError("es53_check needs n, a, r >= 1");
  std::vector<DivisibilityViolation> out;
  for (long p : prime_divisors(a)) {
    const long t = factorial_valuation(n, p);
    if (t == 0) continue;
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(t));
    if (Integer(r) % power != 0) out.push_back({p, t});
  }
  return out;
}

bool cnec_check(long n, long a, long r) {
  if (n < 0) throw UsageError("cnec_check needs n >= 0");
  const Integer nf = factorial(static_cast<unsigned>(n));
  for (long ell = 0; ell <= n; ++ell) {
    Integer value(r);
    for (long j = 1; j <= n; ++j) value *= Integer(ell + j * a);
    if (value % nf != 0) return false;
  }
  return true;
}

Certificate rank1_certificate(const CIContext& ctx) {
  if (ctx.r() != 1) throw UsageError("rank1_certificate needs r = 1");
  if (ctx.a() < 2 || ctx.m() < 1) throw UsageError("rank1_certificate needs a >= 2 and m >= 1");
  Certificate cert;
  cert.input = ci_input(ctx);
  cert.branch = Branch::kRank1Interval;
  const auto& p = ctx.profile();
  Integer lower = Integer(ctx.m()) * (ctx.a() - 1) + p.S() - static_cast<long>(p.s());
  Integer upper(ctx.a() - 1);
  cert.conclusion = lower > upper ? Conclusion::kNonexistent : Conclusion::kInconclusive;
  cert.witnesses.interval = std::make_pair(std::move(lower), std::move(upper));
  cert.hypotheses_attested.emplace_back("X is a smooth complete intersection");
  cert.hypotheses_attested.emplace_back("Pic(X) = Z H");
  if (cert.conclusion == Conclusion::kInconclusive) cert.notes.emplace_back("the interval for c_1(E) is not empty");
  return cert;
}

CIContext reduce_to_dim4(const CIContext& ctx) {
  if (ctx.m() < 4) throw UsageError("reduce_to_dim4 needs m >= 4");
  if (ctx.a() < 2) throw UsageError("reduce_to_dim4 needs a >= 2");
  std::vector<long> degrees = ctx.degrees();
  degrees.insert(degrees.end(), static_cast<std::size_t>(ctx.m() - 4), ctx.a());
  if (degrees.size() < 4) degrees.resize(4, 1);
  return CIContext(4, std::move(degrees), ctx.a(), ctx.r());
}

Rational v_value(const std::vector<long>& degrees, long a_value, long b_value) {
  Integer p2, p4;
  for (long d : degrees) {
    const Integer sq = Integer(d) * d;
    p2 += sq;
    p4 += sq * sq;
  }
  const Integer m22 = (p2 * p2 - p4) / 2;
  const Integer a(a_value), b(b_value), s(static_cast<long>(degrees.size()));
  const Integer a2 = a * a;
  return Rational(Integer(b * p4 + 10 * m22 + (50 * a2 - 10 * s - 50) * p2 - 250 * a2 - 50 * a2 * s + 5 * s * s +
                          150 + (55 - b) * s - 5 * b + (100 + 5 * b) * a2 * a2));
}

Certificate certify_ci(const CIContext& ctx) {
  if (ctx.m() < 4 || ctx.a() < 2 || ctx.r() < 1 || ctx.r() > 3)
    throw OutOfTheoremScope("certify_ci covers m >= 4, a >= 2, 1 <= r <= 3");
  if (ctx.r() == 1) return rank1_certificate(ctx);

  Certificate cert;
  cert.input = ci_input(ctx);
  attest_ci_hypotheses(ctx, cert);
  if (ctx.m() == 4 && ctx.profile().d() >= 2 && is_excluded_type(ctx.degrees())) {
    cert.branch = Branch::kInconclusive;
    cert.conclusion = Conclusion::kInconclusive;
    cert.notes.emplace_back(std::count(ctx.degrees().begin(), ctx.degrees().end(), 2L) == 1
                                ? "excluded type (2, 1, ..., 1)"
                                : "excluded type (2, 2, 1, ..., 1)");
    return cert;
  }

  CIContext reduced = reduce_to_dim4(ctx);
  const UlrichNumerics num = reduced.r() == 2 ? r2_chain(reduced) : r3_chain(reduced);
  const long b = reduced.r() == 2 ? 8 : 9;
  const long factor = reduced.r() == 2 ? 4320 : 3840;
  Rational delta = num.chiZ_noether - num.chiZ_rr;
  Rational v = v_value(reduced.degrees(), reduced.a(), b);
  const Rational d(reduced.profile().d());
  if (delta * Rational(factor) != d * v)
    throw InternalContradiction("delta chi * " + std::to_string(factor) + " = " +
                                (delta * Rational(factor)).to_string() + " but d * v = " + (d * v).to_string());
  if (v.sign() <= 0) throw InternalContradiction("v = " + v.to_string() + " is not positive");

  cert.branch = Branch::kChiMismatch;
  cert.conclusion = Conclusion::kNonexistent;
  cert.witnesses.delta_chi = std::move(delta);
  cert.witnesses.v_value = std::move(v);
  cert.witnesses.factor = factor;
  cert.reduced = std::move(reduced);
  cert.numerics = num;
  return cert;
}

Certificate certify_veronese(long n, long a, long r) {
  if (n < 4 || a < 2 || r < 1 || r > 3)
    throw OutOfTheoremScope("certify_veronese covers n >= 4, a >= 2, 1 <= r <= 3");
  Certificate cert;
  if (n == 4) {
    cert = certify_ci(CIContext(4, {1}, a, r));
  } else if (a == 2 && (n == 5 || n == 6) && r >= 2) {
    cert.branch = Branch::kEs53Divisibility;
    for (const auto& v : es53_check(n, a, r)) cert.witnesses.violated.push_back(v.text());
    if (cert.witnesses.violated.empty())
      throw InternalContradiction("no divisibility violation for n = " + std::to_string(n) + ", r = " +
                                  std::to_string(r));
    cert.conclusion = Conclusion::kNonexistent;
    cert.hypotheses_attested.emplace_back("divisibility of r for Ulrich bundles on Veronese embeddings");
  } else {
    cert = certify_ci(CIContext(4, std::vector<long>(static_cast<std::size_t>(n - 4), a), a, r));
    cert.hypotheses_attested.emplace_back("a very general complete intersection of type (a, ..., a) carries E");
  }
  cert.input = {n, 4, {}, a, r};
  if (!cnec_check(n, a, r)) cert.notes.emplace_back("chi(E(l)) is not integer-valued either");
  return cert;
}

Certificate replay(const Certificate& cert) {
  const auto& in = cert.input;
  if (in.n) return certify_veronese(*in.n, in.a, in.r);
  return certify_ci(CIContext(in.m, in.degrees, in.a, in.r));
}

bool replay_matches(const Certificate& cert) { return replay(cert) == cert; }

bool same_outcome(const Certificate& x, const Certificate& y) {
  return x.branch == y.branch && x.witnesses == y.witnesses && x.conclusion == y.conclusion;
}

}  // namespace ulrich
