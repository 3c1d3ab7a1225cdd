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

#include "ulrich/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "ulrich/appendix.hpp"
#include "ulrich/binomial.hpp"
#include "ulrich/certifier.hpp"
#include "ulrich/errors.hpp"
#include "ulrich/invariants.hpp"
#include "ulrich/json.hpp"
#include "ulrich/symmetric.hpp"

namespace ulrich {

std::vector<std::vector<long>> acceptance_sample(std::size_t count) {
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<long> len(1, 5), deg(1, 4);
  std::vector<std::vector<long>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<long> t(static_cast<std::size_t>(len(rng)));
    for (long& d : t) d = deg(rng);
    out.push_back(std::move(t));
  }
  return out;
}

namespace {

// Collects failures; a criterion passes when none were recorded.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool pass() const { return failed_ == 0; }
  std::string detail() const {
    std::ostringstream os;
    os << checks_ - failed_ << "/" << checks_ << " checks";
    for (const auto& f : failures_) os << "; " << f;
    return os.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::string where(long a, long s) { return "a=" + std::to_string(a) + " s=" + std::to_string(s); }

std::string tuple_text(const std::vector<long>& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + std::to_string(t[i]);
  return out + ")";
}

void f_tables(Tally& t) {
  for (long a = 2; a <= 6; ++a)
    for (std::size_t s = 4; s <= 7; ++s) {
      AppendixWorkspace ws(a, s);
      for (FVariant v : kAllFVariants)
        t.expect(check_f_table(ws, v).pass, variant_name(v) + " " + where(a, static_cast<long>(s)));
    }
}

void s4_displays(Tally& t) {
  for (long a = 2; a <= 7; ++a) {
    AppendixWorkspace ws(a, 4);
    for (FVariant v : kAllFVariants) t.expect(check_f_s4_display(ws, v).pass, variant_name(v) + " a=" + std::to_string(a));
  }
}

void expansions(Tally& t) {
  for (long a = 2; a <= 5; ++a)
    for (std::size_t s = 4; s <= 6; ++s) t.expect(check_expansions(a, s).pass, where(a, static_cast<long>(s)));
}

void differences(Tally& t) {
  for (long a = 2; a <= 6; ++a)
    for (std::size_t s = 4; s <= 7; ++s)
      t.expect(check_difference_identities(a, s).pass, where(a, static_cast<long>(s)));
}

void v_positivity(Tally& t) {
  std::vector<VReport> reports;
  try {
    reports = check_v_positivity(5, 5, 4);
  } catch (const VerificationFailure& e) {
    t.expect(false, std::string(e.what()) + " at " + e.witness());
    return;
  }
  t.expect(reports.size() == 4 * 5 * 2, "report count");
  for (const VReport& r : reports) {
    const std::string w = "s=" + std::to_string(r.s) + " a=" + std::to_string(r.a) + " b=" + std::to_string(r.b);
    t.expect(r.ones_value_checked, "all-ones value " + w);
    t.expect(r.values.size() == static_cast<std::size_t>(std::pow(4, r.s)), "grid size " + w);
    if (r.a == 1) {
      t.expect(r.base_checked && r.min_value.is_zero(), "base case " + w);
    } else {
      t.expect(r.recursion_checked, "recursion " + w);
      t.expect(r.positive, "positivity " + w);
    }
  }
}

void degree_routes(Tally& t) {
  for (const auto& degrees : acceptance_sample())
    for (long m : {3L, 4L, 5L})
      for (long r : {2L, 3L})
        for (long a = 2; a <= 4; ++a) {
          const CIContext ctx(m, degrees, a, r);
          const Rational deg = degZ(ctx);
          const std::string w = tuple_text(degrees) + " m=" + std::to_string(m) + " r=" + std::to_string(r) +
                                " a=" + std::to_string(a);
          t.expect(deg == degZ_via_chern(ctx), "degZ routes " + w);
          t.expect(e_coeff(ctx) * Rational(ctx.profile().d()) == deg, "e*d " + w);
        }
}

void endgame(Tally& t) {
  for (const auto& degrees : acceptance_sample())
    for (long r : {2L, 3L})
      for (long a = 2; a <= 4; ++a) {
        const CIContext ctx(4, degrees, a, r);
        const UlrichNumerics n = r == 2 ? r2_chain(ctx) : r3_chain(ctx);
        const Rational lhs = (n.chiZ_noether - n.chiZ_rr) * Rational(r == 2 ? 4320 : 3840);
        const Rational rhs = Rational(ctx.profile().d()) * v_value(ctx.degrees(), a, r == 2 ? 8 : 9);
        t.expect(lhs == rhs, tuple_text(degrees) + " r=" + std::to_string(r) + " a=" + std::to_string(a));
      }
}

void veronese_sweep(Tally& t) {
  bool seen_n4 = false, seen_es53 = false, seen_chi = false, seen_rank1 = false;
  for (long n = 4; n <= 8; ++n)
    for (long a = 2; a <= 5; ++a)
      for (long r = 1; r <= 3; ++r) {
        const Certificate c = certify_veronese(n, a, r);
        const std::string w = "(" + std::to_string(n) + "," + std::to_string(a) + "," + std::to_string(r) + ")";
        t.expect(c.conclusion == Conclusion::kNonexistent, "conclusion " + w);
        Branch expected = Branch::kChiMismatch;
        if (r == 1) expected = Branch::kRank1Interval;
        else if (a == 2 && (n == 5 || n == 6)) expected = Branch::kEs53Divisibility;
        t.expect(c.branch == expected, "branch " + w + " = " + branch_name(c.branch));
        seen_rank1 |= c.branch == Branch::kRank1Interval;
        seen_es53 |= c.branch == Branch::kEs53Divisibility;
        seen_chi |= c.branch == Branch::kChiMismatch;
        seen_n4 |= n == 4 && c.conclusion == Conclusion::kNonexistent;
      }
  t.expect(seen_n4 && seen_es53 && seen_chi && seen_rank1, "branch coverage");
}

void cnec_translations(Tally& t) {
  for (long r = 1; r <= 6; ++r)
    for (long a = 1; a <= 10; ++a) {
      const std::string w = "a=" + std::to_string(a) + " r=" + std::to_string(r);
      t.expect(cnec_check(2, a, r) == (r * (a - 1) % 2 == 0), "n=2 " + w);
      t.expect(cnec_check(3, a, r) == (r * (a * a - 1) % 6 == 0), "n=3 " + w);
    }
}

void properties(Tally& t) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> coeff(-9, 9), denom(1, 6);
  for (std::size_t s = 1; s <= 5; ++s)
    for (int trial = 0; trial < 5; ++trial) {
      BasisExpr b(s);
      for (long w = 0; w <= 4; ++w)
        for (const Partition& p : partitions_of(w)) b.add(p, Rational(coeff(rng), denom(rng)));
      t.expect(to_basis(from_basis(b)) == b, "basis round trip s=" + std::to_string(s));
    }

  for (long ell = 0; ell <= 20; ++ell)
    for (long m = 0; m <= 20; ++m) {
      Rational product(1);
      for (long j = 0; j < m; ++j) product *= Rational(-ell - j);
      product /= Rational(factorial(static_cast<unsigned>(m)));
      t.expect(binom(Rational(-ell), m) == product, "binomial l=" + std::to_string(ell) + " m=" + std::to_string(m));
    }

  struct FParams {
    long a, m;
    std::size_t s;
    long r, ell;
  };
  for (const FParams& p : {FParams{2, 4, 5, 2, 0}, FParams{3, 4, 6, 3, 1}, FParams{2, 3, 4, 2, -1},
                           FParams{4, 5, 3, 3, 2}, FParams{3, 2, 4, 2, 0}}) {
    const SparsePoly f = build_f(p.a, p.m, p.s, p.r, p.ell);
    t.expect(check_f_structure_of(f, p.a, p.m, p.r, p.ell).pass, "f structure a=" + std::to_string(p.a));
    std::vector<SparsePoly::Term> terms = f.terms();
    terms.front().second += Rational(1);
    const SparsePoly mutated = SparsePoly::from_terms(f.nvars(), std::move(terms));
    t.expect(!check_f_structure_of(mutated, p.a, p.m, p.r, p.ell).pass, "mutation detected a=" + std::to_string(p.a));
  }

  const auto sample = acceptance_sample(40);
  for (const auto& degrees : sample)
    for (long a = 2; a <= 3; ++a)
      for (long r = 1; r <= 3; ++r) {
        std::vector<long> padded = degrees;
        padded.insert(padded.end(), 2, 1);
        const Certificate plain = certify_ci(CIContext(4, degrees, a, r));
        const Certificate more = certify_ci(CIContext(4, padded, a, r));
        t.expect(same_outcome(plain, more), "padding " + tuple_text(degrees));
        t.expect(replay_matches(plain), "replay " + tuple_text(degrees));
        t.expect(Json(replay(plain)).dump() == Json(plain).dump(), "replay json " + tuple_text(degrees));
      }
  for (long n = 4; n <= 8; ++n)
    for (long r = 1; r <= 3; ++r) t.expect(replay_matches(certify_veronese(n, 2, r)), "veronese replay");
}

struct Criterion {
  const char* name;
  void (*run)(Tally&);
};

constexpr Criterion kCriteria[kCriterionCount] = {
    {"f coefficient tables, a in 2..6, s in 4..7", f_tables},
    {"f at s = 4 against the displays, a in 2..7", s4_displays},
    {"g, delta, h, k, c, chi' expansions, a in 2..5, s in 4..6", expansions},
    {"difference identities with v_8 and v_9, a in 2..6, s in 4..7", differences},
    {"v recursion, base case and positivity", v_positivity},
    {"degZ by two routes and e*d = degZ", degree_routes},
    {"endgame relation delta chi * factor = d * v", endgame},
    {"Veronese sweep n in 4..8, a in 2..5, r in 1..3", veronese_sweep},
    {"integrality conditions for n = 2, 3", cnec_translations},
    {"property suites", properties},
};

}  // namespace

CriterionResult run_criterion(int id) {
  if (id < 1 || id > kCriterionCount) throw UsageError("criterion id must be in 1.." + std::to_string(kCriterionCount));
  const Criterion& c = kCriteria[id - 1];
  CriterionResult out;
  out.id = id;
  out.name = c.name;
  const auto start = std::chrono::steady_clock::now();
  Tally tally;
  try {
    c.run(tally);
    out.pass = tally.pass();
    out.detail = tally.detail();
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("exception: ") + e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::vector<CriterionResult> run_acceptance(unsigned jobs) {
  std::vector<CriterionResult> results(kCriterionCount);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < kCriterionCount; i = next++) results[static_cast<std::size_t>(i)] = run_criterion(i + 1);
  };
  const unsigned n = std::max(1u, std::min(jobs, static_cast<unsigned>(kCriterionCount)));
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  return results;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("ULRICH_JOBS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 256) return static_cast<unsigned>(v);
  }
  return 1;
}

}  // namespace ulrich
