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

#include "ulrich/appendix.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ulrich/errors.hpp"
#include "ulrich/euler.hpp"

namespace ulrich {

long variant_rank(FVariant v) { return v == FVariant::kRank2Twist0 ? 2 : 3; }

long variant_twist(FVariant v) { return v == FVariant::kRank3Twist1 ? 1 : 0; }

std::string variant_name(FVariant v) {
  switch (v) {
    case FVariant::kRank2Twist0: return "r2l0";
    case FVariant::kRank3Twist0: return "r3l0";
    case FVariant::kRank3Twist1: return "r3l1";
  }
  return "?";
}

FVariant parse_variant(const std::string& name) {
  for (FVariant v : kAllFVariants)
    if (variant_name(v) == name) return v;
  throw UsageError("unknown variant '" + name + "' (expected r2l0, r3l0 or r3l1)");
}

std::string sym_function_name(SymFunction f) {
  switch (f) {
    case SymFunction::kG: return "g";
    case SymFunction::kDelta: return "delta";
    case SymFunction::kH: return "h";
    case SymFunction::kK: return "k";
    case SymFunction::kC: return "c";
    case SymFunction::kChiPrime: return "chi_prime";
  }
  return "?";
}

namespace {

const char* const kKNote =
    "k is built as 5t*h - (25/4)t^2*delta with t = m_1 - s + 3a - 5; the printed "
    "definition line carries an unmatched '-5)' that is treated as a typo";
const char* const kGNote =
    "g carries the prefactor 5/1728 (the value forced by the printed expansion and "
    "by the Noether route); the definition line prints 1/1728";

void require_params(long a, std::size_t s) {
  if (a < 1) throw UsageError("a must be >= 1");
  if (s < 1 || s > kMaxVars) throw UsageError("s must be in 1.." + std::to_string(kMaxVars));
}

}  // namespace

AppendixWorkspace::AppendixWorkspace(long a, std::size_t s) : a_(a), s_(s) { require_params(a, s); }

SparsePoly AppendixWorkspace::all_vars_product() const { return expand_m(Partition::ones(s_), s_); }

SparsePoly AppendixWorkspace::m(const Partition& lambda) const { return expand_m(lambda, s_); }
SparsePoly AppendixWorkspace::m1() const { return m(Partition{1}); }
SparsePoly AppendixWorkspace::m11() const { return m(Partition{1, 1}); }

const SparsePoly& AppendixWorkspace::f(FVariant variant) {
  auto it = f_.find(variant);
  if (it == f_.end())
    it = f_.emplace(variant, build_f(a_, 4, s_, variant_rank(variant), variant_twist(variant))).first;
  return it->second;
}

const SparsePoly& AppendixWorkspace::g() {
  if (!g_) {
    const Integer a(a_), s(static_cast<long>(s_));
    const Integer a2 = a * a, a3 = a2 * a, a4 = a3 * a, s2 = s * s, s3 = s2 * s, s4 = s3 * s;
    const SparsePoly M1 = m1(), M11 = m11();
    const SparsePoly M1sq = M1 * M1;
    auto k = [](const Integer& z) { return Rational(z); };
    SparsePoly inner = SparsePoly::constant(
        s_, k(25900 - 82800 * a + 95380 * a2 - 46800 * a3 + 8320 * a4 + 21160 * s - 50220 * a * s +
              38336 * a2 * s - 9360 * a3 * s + 6481 * s2 - 10152 * a * s2 + 3852 * a2 * s2 + 882 * s3 -
              684 * a * s3 + 45 * s4));
    inner += M1 * k(-21600 + 50760 * a - 38520 * a2 + 9360 * a3 - 13140 * s + 20412 * a * s - 7704 * a2 * s -
                    2664 * s2 + 2052 * a * s2 - 180 * s3);
    inner += M1sq * k(7100 - 10800 * a + 4036 * a2 + 2860 * s - 2160 * a * s + 288 * s2);
    inner += M1sq * M1 * k(-1080 + 792 * a - 216 * s);
    inner += M1sq * M1sq * Rational(64);
    inner += M11 * k(-880 + 1080 * a - 368 * a2 - 356 * s + 216 * a * s - 36 * s2);
    inner += M1 * M11 * k(360 - 216 * a + 72 * s);
    inner += M1sq * M11 * Rational(-40);
    inner += M11 * M11 * Rational(4);
    g_ = all_vars_product() * inner * Rational(5, 1728);
  }
  return *g_;
}

const SparsePoly& AppendixWorkspace::delta() {
  if (!delta_) {
    const Integer a(a_), s(static_cast<long>(s_));
    const SparsePoly M1 = m1();
    SparsePoly inner =
        SparsePoly::constant(s_, Rational(Integer(145 - 300 * a + 155 * a * a + 59 * s - 60 * a * s + 6 * s * s)));
    inner += M1 * Rational(Integer(-60 + 60 * a - 12 * s));
    inner += M1 * M1 * Rational(7);
    inner -= m11() * Rational(2);
    delta_ = all_vars_product() * inner * Rational(1, 8);
  }
  return *delta_;
}

const SparsePoly& AppendixWorkspace::h() {
  if (!h_) {
    SparsePoly out = f(FVariant::kRank3Twist0) - f(FVariant::kRank3Twist1);
    out *= Rational(2);
    h_ = out + delta();
  }
  return *h_;
}

const SparsePoly& AppendixWorkspace::k() {
  if (!k_) {
    const SparsePoly t = m1() + Rational(3 * a_ - 5 - static_cast<long>(s_));
    k_ = t * h() * Rational(5) - t * t * delta() * Rational(25, 4);
  }
  return *k_;
}

const SparsePoly& AppendixWorkspace::c() {
  if (!c_) {
    const Integer a(a_), s(static_cast<long>(s_));
    const SparsePoly M1 = m1();
    SparsePoly q = SparsePoly::constant(
        s_, Rational(Integer(-1315 + 1800 * a - 605 * a * a - 523 * s + 360 * a * s - 52 * s * s)));
    q += M1 * Rational(Integer(520 - 360 * a + 104 * s));
    q -= M1 * M1 * Rational(49);
    q -= m11() * Rational(6);
    const SparsePoly lin = M1 * Rational(4) + Rational(15 * a_ - 20 - 4 * static_cast<long>(s_));
    c_ = q * delta() * Rational(1, 8) + lin * h();
  }
  return *c_;
}

const SparsePoly& AppendixWorkspace::chi_prime() {
  if (!chi_prime_) chi_prime_ = (k() + c()) * Rational(1, 12);
  return *chi_prime_;
}

const SparsePoly& AppendixWorkspace::v(long b) {
  auto it = v_.find(b);
  if (it == v_.end()) it = v_.emplace(b, build_v(s_, a_, b)).first;
  return it->second;
}

const SparsePoly& AppendixWorkspace::get(SymFunction fn) {
  switch (fn) {
    case SymFunction::kG: return g();
    case SymFunction::kDelta: return delta();
    case SymFunction::kH: return h();
    case SymFunction::kK: return k();
    case SymFunction::kC: return c();
    case SymFunction::kChiPrime: return chi_prime();
  }
  throw UsageError("unknown symmetric function");
}

SparsePoly build_g(long a, std::size_t s) { return AppendixWorkspace(a, s).g(); }
SparsePoly build_delta(long a, std::size_t s) { return AppendixWorkspace(a, s).delta(); }
SparsePoly build_h(long a, std::size_t s) { return AppendixWorkspace(a, s).h(); }
SparsePoly build_k(long a, std::size_t s) { return AppendixWorkspace(a, s).k(); }
SparsePoly build_c(long a, std::size_t s) { return AppendixWorkspace(a, s).c(); }
SparsePoly build_chi_prime(long a, std::size_t s) { return AppendixWorkspace(a, s).chi_prime(); }

SparsePoly build_v(std::size_t s, long a_value, long b_value) {
  if (s < 1 || s > kMaxVars) throw UsageError("s must be in 1.." + std::to_string(kMaxVars));
  const Integer a(a_value), b(b_value), n(static_cast<long>(s));
  const Integer a2 = a * a;
  SparsePoly out = expand_m(Partition{4}, s) * Rational(b);
  out += expand_m(Partition{2, 2}, s) * Rational(10);
  out += expand_m(Partition{2}, s) * Rational(Integer(50 * a2 - 10 * n - 50));
  out += Rational(Integer(-250 * a2 - 50 * a2 * n + 5 * n * n + 150 + (55 - b) * n - 5 * b + (100 + 5 * b) * a2 * a2));
  return out;
}

namespace {

std::string str(long v) { return std::to_string(v); }

VerificationReport make_report(std::string lemma, std::vector<std::pair<std::string, std::string>> params) {
  VerificationReport r;
  r.lemma = std::move(lemma);
  r.parameters = std::move(params);
  return r;
}

BasisExpr table_expr(const CoeffTable& t, std::size_t s) {
  BasisExpr out(s);
  const auto& basis = degree4_basis();
  for (std::size_t i = 0; i < basis.size(); ++i) out.add(basis[i], t.coeffs[i] / t.M);
  return out;
}

// Records one residual per basis element (the printed ones first, then any
// stray partition in `actual`) and returns whether all vanish.
bool compare_basis(const BasisExpr& actual, const BasisExpr& expected, const std::string& prefix,
                   std::vector<Residual>& out) {
  bool ok = true;
  BasisExpr::Map seen;
  auto record = [&](const Partition& p) {
    if (seen.contains(p)) return;
    seen.emplace(p, Rational(0));
    Rational diff = actual.coeff(p) - expected.coeff(p);
    if (!diff.is_zero()) ok = false;
    out.push_back({prefix + p.label(), std::move(diff)});
  };
  for (const Partition& p : degree4_basis())
    if (p.length() <= actual.nvars()) record(p);
  for (const auto& [p, c] : expected.coeffs()) record(p);
  for (const auto& [p, c] : actual.coeffs()) record(p);
  return ok;
}

std::string monomial_label(std::size_t nvars, const Monomial& m) {
  return SparsePoly::from_canonical_terms(nvars, {{m, Rational(1)}}).to_string();
}

// f / m_{1^s} in the monomial basis, or a failure note.
std::optional<BasisExpr> reduced_basis(const SparsePoly& f, VerificationReport& report, const std::string& what) {
  try {
    return to_basis(divide_all_vars(f));
  } catch (const Error& e) {
    report.notes.push_back(what + ": " + e.what());
    return std::nullopt;
  }
}

VerificationReport compare_with_table(AppendixWorkspace& ws, FVariant variant, const CoeffTable& table,
                                      std::string lemma) {
  VerificationReport report = make_report(
      std::move(lemma), {{"a", str(ws.a())}, {"s", str(static_cast<long>(ws.s()))}, {"variant", variant_name(variant)}});
  auto actual = reduced_basis(ws.f(variant), report, "f");
  report.pass = actual && compare_basis(*actual, table_expr(table, ws.s()), "", report.residuals);
  return report;
}

}  // namespace

VerificationReport check_f_table(AppendixWorkspace& ws, FVariant variant) {
  if (ws.s() < 4) throw UsageError("the coefficient tables are stated for s >= 4");
  return compare_with_table(ws, variant, f_coefficient_table(variant, ws.a(), static_cast<long>(ws.s())),
                            "f-coefficient-table");
}

VerificationReport check_f_table(long a, std::size_t s, FVariant variant) {
  if (s < 4) throw UsageError("the coefficient tables are stated for s >= 4");
  AppendixWorkspace ws(a, s);
  return check_f_table(ws, variant);
}

VerificationReport check_f_s4_display(AppendixWorkspace& ws, FVariant variant) {
  if (ws.s() != 4) throw UsageError("the s = 4 display needs a workspace with s = 4");
  return compare_with_table(ws, variant, f_s4_display(variant, ws.a()), "f-s4-display");
}

VerificationReport check_expansions(AppendixWorkspace& ws) {
  VerificationReport report =
      make_report("symmetric-expansions", {{"a", str(ws.a())}, {"s", str(static_cast<long>(ws.s()))}});
  report.pass = true;
  for (SymFunction fn : kAllSymFunctions) {
    const std::string name = sym_function_name(fn);
    auto actual = reduced_basis(ws.get(fn), report, name);
    if (!actual) {
      report.pass = false;
      continue;
    }
    if (!compare_basis(*actual, printed_expansion(fn, ws.a(), ws.s()), name + ":", report.residuals))
      report.pass = false;
  }
  report.notes.emplace_back(kGNote);
  report.notes.emplace_back(kKNote);
  return report;
}

VerificationReport check_expansions(long a, std::size_t s) {
  AppendixWorkspace ws(a, s);
  return check_expansions(ws);
}

VerificationReport check_difference_identities(AppendixWorkspace& ws) {
  if (ws.s() < 4) throw UsageError("the difference identities are stated for s >= 4");
  VerificationReport report =
      make_report("difference-identities", {{"a", str(ws.a())}, {"s", str(static_cast<long>(ws.s()))}});
  const SparsePoly prod = ws.all_vars_product();
  struct Identity {
    std::string name;
    SparsePoly difference;
  };
  const Identity identities[] = {
      {"g - f_r2l0 - m_{1^s}/4320 v_8",
       ws.g() - ws.f(FVariant::kRank2Twist0) - prod * ws.v(8) * Rational(1, 4320)},
      {"chi_prime - f_r3l0 - m_{1^s}/3840 v_9",
       ws.chi_prime() - ws.f(FVariant::kRank3Twist0) - prod * ws.v(9) * Rational(1, 3840)},
  };
  report.pass = true;
  for (const auto& id : identities) {
    if (id.difference.is_zero()) {
      report.notes.push_back(id.name + " = 0");
      continue;
    }
    report.pass = false;
    report.notes.push_back(id.name + " = " + id.difference.to_string());
    for (const auto& [mono, c] : id.difference.terms())
      report.residuals.push_back({id.name + " @ " + monomial_label(ws.s(), mono), c});
  }
  report.notes.emplace_back(kGNote);
  report.notes.emplace_back(kKNote);
  return report;
}

VerificationReport check_difference_identities(long a, std::size_t s) {
  if (s < 4) throw UsageError("the difference identities are stated for s >= 4");
  AppendixWorkspace ws(a, s);
  return check_difference_identities(ws);
}

VerificationReport check_f_structure_of(const SparsePoly& f, long a, long m, long r, long ell) {
  const std::size_t s = f.nvars();
  if (s < 2) throw UsageError("the structure checks need s >= 2");
  VerificationReport report = make_report(
      "f-structure",
      {{"a", str(a)}, {"m", str(m)}, {"s", str(static_cast<long>(s))}, {"r", str(r)}, {"l", str(ell)}});
  report.pass = true;
  try {
    to_basis(f);
    report.notes.emplace_back("symmetric: yes");
  } catch (const SymmetryError& e) {
    report.pass = false;
    report.notes.push_back(std::string("symmetric: no (") + e.what() + ")");
  }
  try {
    divide_all_vars(f);
    report.notes.emplace_back("divisible by every variable: yes");
  } catch (const DivisibilityError& e) {
    report.pass = false;
    report.notes.push_back(std::string("divisible by every variable: no (") + e.what() + ")");
  }
  for (std::size_t k = 1; k < s; ++k) {
    const SparsePoly diff = specialize_ones(f, k) - build_f(a, m, k, r, ell);
    if (diff.is_zero()) continue;
    report.pass = false;
    report.notes.push_back("specialization to k = " + std::to_string(k) + " differs by " + diff.to_string());
    for (const auto& [mono, c] : diff.terms())
      report.residuals.push_back({"k=" + std::to_string(k) + " @ " + monomial_label(k, mono), c});
  }
  return report;
}

VerificationReport check_f_structure(long a, long m, std::size_t s, long r, long ell) {
  if (s < 2) throw UsageError("the structure checks need s >= 2");
  return check_f_structure_of(build_f(a, m, s, r, ell), a, m, r, ell);
}

namespace {

std::string tuple_text(const std::vector<long>& t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ')';
  return os.str();
}

// Calls `visit` on every tuple in {1..d_max}^s, lexicographically.
void for_each_tuple(std::size_t s, long d_max, const std::function<void(const std::vector<long>&)>& visit) {
  std::vector<long> t(s, 1);
  while (true) {
    visit(t);
    std::size_t i = s;
    while (i > 0 && t[i - 1] == d_max) t[--i] = 1;
    if (i == 0) return;
    ++t[i - 1];
  }
}

}  // namespace

std::vector<VReport> check_v_positivity(long s_max, long a_max, long d_max) {
  if (s_max < 2 || a_max < 2 || d_max < 1)
    throw UsageError("check_v_positivity needs s_max >= 2, a_max >= 2, d_max >= 1");
  if (s_max > static_cast<long>(kMaxVars)) throw UsageError("s_max exceeds the variable limit");
  std::vector<VReport> reports;
  for (long s = 2; s <= s_max; ++s) {
    const auto n = static_cast<std::size_t>(s);
    const SparsePoly m2 = expand_m(Partition{2}, n);
    for (long b : {8L, 9L}) {
      std::optional<SparsePoly> previous;
      for (long a = 1; a <= a_max; ++a) {
        const std::string where = "s=" + str(s) + " a=" + str(a) + " b=" + str(b);
        VReport rep;
        rep.s = s;
        rep.a = a;
        rep.b = b;
        SparsePoly v = build_v(n, a, b);
        if (previous) {
          const Integer za(a);
          SparsePoly step = (m2 - Rational(s)) * Rational(10) +
                            Rational(Integer(b * (2 * za * za - 2 * za + 1) + 10 * (4 * za * za - 4 * za - 3)));
          step *= Rational(5 * (2 * a - 1));
          if (v - *previous != step)
            throw VerificationFailure("recursion in a fails for v", where);
          rep.recursion_checked = true;
        }
        const std::vector<Rational> ones(n, Rational(1));
        const Integer zb(b), za(a);
        const Rational ones_expected(Integer((100 + 5 * zb) * za * za * za * za - 250 * za * za + 150 - 5 * zb));
        if (v.eval(ones) != ones_expected)
          throw VerificationFailure("value of v at the all-ones tuple differs from the closed form", where);
        rep.ones_value_checked = true;

        bool first = true;
        std::vector<Rational> point(n);
        for_each_tuple(n, d_max, [&](const std::vector<long>& t) {
          for (std::size_t i = 0; i < n; ++i) point[i] = Rational(t[i]);
          Rational value = v.eval(point);
          const bool all_ones = std::all_of(t.begin(), t.end(), [](long x) { return x == 1; });
          if (a == 1) {
            if (value.sign() < 0 || (value.is_zero() != all_ones))
              throw VerificationFailure("v at a = 1 is negative or vanishes away from the all-ones tuple",
                                        where + " d=" + tuple_text(t) + " v=" + value.to_string());
          } else if (value.sign() <= 0) {
            throw VerificationFailure("v is not positive", where + " d=" + tuple_text(t) + " v=" + value.to_string());
          }
          if (first || value < rep.min_value) {
            rep.min_value = value;
            rep.min_witness = t;
            first = false;
          }
          rep.values.emplace(t, std::move(value));
        });
        rep.base_checked = (a == 1);
        rep.positive = rep.min_value.sign() > 0;
        reports.push_back(std::move(rep));
        previous = std::move(v);
      }
    }
  }
  return reports;
}

}  // namespace ulrich
