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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "ulrich/acceptance.hpp"
#include "ulrich/appendix.hpp"
#include "ulrich/certifier.hpp"
#include "ulrich/errors.hpp"
#include "ulrich/euler.hpp"
#include "ulrich/invariants.hpp"
#include "ulrich/json.hpp"

namespace ulrich::cli {
namespace {

struct Range {
  long lo = 0;
  long hi = 0;
  std::string text() const { return std::to_string(lo) + ".." + std::to_string(hi); }
};

// "lo..hi" (inclusive) or a single value.
Range parse_range(const std::string& text, const char* what) {
  auto to_long = [&](const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError(std::string("bad ") + what + " range '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = to_long(text);
  } else {
    r.lo = to_long(text.substr(0, dots));
    r.hi = to_long(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw UsageError(std::string("empty ") + what + " range '" + text + "'");
  return r;
}

std::vector<long> parse_degrees(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v < 1) throw UsageError("bad degree list '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty degree list");
  return out;
}

struct Common {
  std::string format = "text";
  std::string output;
  unsigned jobs = default_jobs();
  bool fail_fast = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--output,-o", c.output, "Write the report to this file instead of stdout");
  sub->add_option("--jobs,-j", c.jobs, "Worker threads (default: $ULRICH_JOBS or 1)")->check(CLI::Range(1u, 256u));
  sub->add_flag("--fail-fast", c.fail_fast, "Stop at the first failing check");
}

// Sends the rendered report to --output or stdout.
void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.output, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + c.output + "' for writing");
  file << text;
}

std::string params_text(const VerificationReport& r) {
  std::string out;
  for (const auto& [k, v] : r.parameters) out += (out.empty() ? "" : " ") + k + "=" + v;
  return out;
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream os;
  os << r.status() << "  " << r.lemma << "  " << params_text(r) << "\n";
  if (!r.pass) {
    for (const auto& res : r.residuals)
      if (!res.value.is_zero()) os << "    residual " << res.element << " = " << res.value << "\n";
    for (const auto& n : r.notes) os << "    note: " << n << "\n";
  }
  return os.str();
}

// ---- verify-appendix -------------------------------------------------------

struct AppendixOptions {
  std::string a = "2..6";
  std::string s = "4..7";
  long d_max = 4;
  long v_s_max = 5;
  std::vector<std::string> checks = {"tables", "displays", "expansions", "differences", "structure", "positivity"};
};

bool wants(const AppendixOptions& o, const std::string& check) {
  return std::find(o.checks.begin(), o.checks.end(), check) != o.checks.end();
}

int verify_appendix(const AppendixOptions& o, const Common& c, std::ostream& out) {
  const Range a = parse_range(o.a, "--a");
  const Range s = parse_range(o.s, "--s");
  if (a.lo < 2) throw UsageError("--a must start at 2 or above");
  if (s.lo < 1 || s.hi > 16) throw UsageError("--s must lie in 1..16");
  if (o.d_max < 1) throw UsageError("--d-max must be >= 1");
  if (o.v_s_max < 2 || o.v_s_max > 16) throw UsageError("--v-s-max must lie in 2..16");

  struct Cell {
    long a;
    std::size_t s;
  };
  std::vector<Cell> cells;
  for (long ai = a.lo; ai <= a.hi; ++ai)
    for (long si = s.lo; si <= s.hi; ++si) cells.push_back({ai, static_cast<std::size_t>(si)});

  std::vector<std::optional<std::vector<VerificationReport>>> results(cells.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size() && !stop; i = next++) {
      AppendixWorkspace ws(cells[i].a, cells[i].s);
      std::vector<VerificationReport> reports;
      if (wants(o, "tables") && ws.s() >= 4)
        for (FVariant v : kAllFVariants) reports.push_back(check_f_table(ws, v));
      if (wants(o, "displays") && ws.s() == 4)
        for (FVariant v : kAllFVariants) reports.push_back(check_f_s4_display(ws, v));
      if (wants(o, "expansions")) reports.push_back(check_expansions(ws));
      if (wants(o, "differences") && ws.s() >= 4) reports.push_back(check_difference_identities(ws));
      if (wants(o, "structure") && ws.s() >= 2)
        for (FVariant v : kAllFVariants)
          reports.push_back(check_f_structure_of(ws.f(v), ws.a(), 4, variant_rank(v), variant_twist(v)));
      if (c.fail_fast && std::any_of(reports.begin(), reports.end(), [](const auto& r) { return !r.pass; }))
        stop = true;
      results[i] = std::move(reports);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < std::min<std::size_t>(c.jobs, cells.size()); ++t) pool.emplace_back(worker);
    worker();
  }

  std::vector<VerificationReport> reports;
  for (auto& r : results)
    if (r) std::move(r->begin(), r->end(), std::back_inserter(reports));
  std::size_t failed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.pass; });

  std::vector<VReport> vreports;
  if (wants(o, "positivity") && !(c.fail_fast && failed > 0))
    vreports = check_v_positivity(o.v_s_max, std::max(2L, a.hi), o.d_max);

  const bool pass = failed == 0;
  if (c.format == "json") {
    Json j{{"grid", {{"a", a.text()}, {"s", s.text()}, {"d_max", o.d_max}, {"v_s_max", o.v_s_max}}},
           {"reports", reports},
           {"status", pass ? "pass" : "fail"},
           {"summary", {{"pass", reports.size() - failed}, {"fail", failed}}}};
    Json vj = Json::array();
    for (const auto& v : vreports) vj.push_back(vreport_json(v));
    j["v_positivity"] = std::move(vj);
    emit(c, j.dump(2) + "\n", out);
  } else {
    std::ostringstream os;
    os << "grid: a=" << a.text() << " s=" << s.text() << "\n";
    for (const auto& r : reports) os << report_text(r);
    for (const auto& v : vreports) {
      os << "pass  v-positivity  s=" << v.s << " a=" << v.a << " b=" << v.b << "  grid " << v.values.size()
         << ", min " << v.min_value << " at (";
      for (std::size_t i = 0; i < v.min_witness.size(); ++i) os << (i ? "," : "") << v.min_witness[i];
      os << ")" << (v.a == 1 ? ", base case" : ", recursion checked") << "\n";
    }
    os << "summary: " << reports.size() - failed << " pass, " << failed << " fail";
    if (!vreports.empty()) os << "; v positivity checked on " << vreports.size() << " (s, a, b) cells";
    os << "\n";
    emit(c, os.str(), out);
  }
  return pass ? kExitOk : kExitFailure;
}

// ---- certificates ------------------------------------------------------------

std::string certificate_text(const Certificate& cert) {
  std::ostringstream os;
  const auto& in = cert.input;
  os << "input: ";
  if (in.n) {
    os << "n=" << *in.n;
  } else {
    os << "m=" << in.m << " degrees=";
    for (std::size_t i = 0; i < in.degrees.size(); ++i) os << (i ? "," : "") << in.degrees[i];
  }
  os << " a=" << in.a << " r=" << in.r << "\n";
  os << "branch: " << branch_name(cert.branch) << "\n";
  os << "conclusion: " << conclusion_name(cert.conclusion) << "\n";
  const Witnesses& w = cert.witnesses;
  if (w.delta_chi) os << "delta_chi: " << *w.delta_chi << "\n";
  if (w.v_value) os << "v_value: " << *w.v_value << "\n";
  if (w.factor) os << "factor: " << *w.factor << "\n";
  if (w.interval) os << "interval: [" << w.interval->first.get_str() << ", " << w.interval->second.get_str() << "]\n";
  for (const auto& v : w.violated) os << "violated: " << v << "\n";
  if (cert.reduced) {
    os << "reduced: m=" << cert.reduced->m() << " degrees=";
    const auto& d = cert.reduced->degrees();
    for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
    os << "\n";
  }
  for (const auto& h : cert.hypotheses_attested) os << "hypothesis: " << h << "\n";
  for (const auto& n : cert.notes) os << "note: " << n << "\n";
  return os.str();
}

int emit_certificate(const Certificate& cert, const Common& c, std::ostream& out) {
  emit(c, c.format == "json" ? Json(cert).dump(2) + "\n" : certificate_text(cert), out);
  return kExitOk;
}

// ---- chi ---------------------------------------------------------------------

int chi_command(long m, const std::string& degrees, long a, long r, const std::string& ell_text, const Common& c,
                std::ostream& out) {
  const ChiProfile profile(m, parse_degrees(degrees), a, r);
  const Rational ell = Rational::parse(ell_text);
  const Rational u = u_coeff(CIContext(profile));
  const Rational ci = chi_ci(ell, profile);
  const Rational ulrich = chi_ulrich(ell, profile);
  const Rational z = chi_Z(ell, profile, u);
  if (c.format == "json") {
    const Json j{{"m", m}, {"degrees", profile.degrees()}, {"a", a}, {"r", r}, {"ell", ell}, {"u", u},
                 {"chi_ci", ci}, {"chi_ulrich", ulrich}, {"chi_Z", z}};
    emit(c, j.dump(2) + "\n", out);
  } else {
    std::ostringstream os;
    os << "u: " << u << "\nchi_ci: " << ci << "\nchi_ulrich: " << ulrich << "\nchi_Z: " << z << "\n";
    emit(c, os.str(), out);
  }
  return kExitOk;
}

// ---- selftest ----------------------------------------------------------------

int selftest(const std::vector<int>& only, const Common& c, std::ostream& out) {
  for (int id : only)
    if (id < 1 || id > kCriterionCount) throw UsageError("--only takes criterion ids 1.." + std::to_string(kCriterionCount));
  std::vector<CriterionResult> results;
  if (only.empty()) {
    results = run_acceptance(c.jobs);
  } else {
    for (int id : only) {
      results.push_back(run_criterion(id));
      if (c.fail_fast && !results.back().pass) break;
    }
  }
  const bool pass = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
  if (c.format == "json") {
    Json arr = Json::array();
    for (const auto& r : results)
      arr.push_back({{"id", r.id}, {"name", r.name}, {"status", r.pass ? "pass" : "fail"}, {"detail", r.detail}});
    emit(c, Json{{"criteria", arr}, {"status", pass ? "pass" : "fail"}}.dump(2) + "\n", out);
  } else {
    std::ostringstream os;
    for (const auto& r : results)
      os << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.detail
         << ")\n";
    emit(c, os.str(), out);
  }
  return pass ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of Ulrich bundle non-existence on Veronese varieties", "ulrich"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ulrich 0.1.0");

  Common common;

  AppendixOptions appendix;
  auto* va = app.add_subcommand("verify-appendix", "Check the symmetric function identities over a grid");
  va->add_option("--a", appendix.a, "Range lo..hi for a")->capture_default_str();
  va->add_option("--s", appendix.s, "Range lo..hi for s")->capture_default_str();
  va->add_option("--d-max", appendix.d_max, "Largest degree in the v positivity grid")->capture_default_str();
  va->add_option("--v-s-max", appendix.v_s_max, "Largest s for the v positivity checks")->capture_default_str();
  va->add_option("--checks", appendix.checks, "Subset of checks to run")
      ->delimiter(',')
      ->check(CLI::IsMember({"tables", "displays", "expansions", "differences", "structure", "positivity"}));
  add_common(va, common);

  long n = 0, a = 0, r = 0, m = 4;
  auto* cv = app.add_subcommand("certify", "Certify non-existence on (P^n, O(a))");
  cv->add_option("--n", n, "Dimension of projective space")->required();
  cv->add_option("--a", a, "Veronese degree")->required();
  cv->add_option("--r", r, "Rank")->required();
  add_common(cv, common);

  std::string degrees;
  auto* cc = app.add_subcommand("certify-ci", "Certify non-existence on a complete intersection");
  cc->add_option("--degrees", degrees, "Comma-separated degrees d1,...,ds")->required();
  cc->add_option("--a", a, "Twist of the polarization")->required();
  cc->add_option("--r", r, "Rank")->required();
  cc->add_option("--m", m, "Dimension")->capture_default_str();
  add_common(cc, common);

  std::string ell = "0";
  auto* ch = app.add_subcommand("chi", "Euler characteristics of O_X, E and O_Z");
  ch->add_option("--degrees", degrees, "Comma-separated degrees d1,...,ds")->required();
  ch->add_option("--a", a, "Twist of the polarization")->required();
  ch->add_option("--r", r, "Rank")->required();
  ch->add_option("--ell", ell, "Twist l (integer or p/q)")->capture_default_str();
  ch->add_option("--m", m, "Dimension")->capture_default_str();
  add_common(ch, common);

  std::vector<int> only;
  auto* st = app.add_subcommand("selftest", "Run the acceptance suite");
  st->add_option("--only", only, "Criterion ids to run")->delimiter(',');
  add_common(st, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitUsage;
  }

  try {
    if (*va) return verify_appendix(appendix, common, out);
    if (*cv) return emit_certificate(certify_veronese(n, a, r), common, out);
    if (*cc) return emit_certificate(certify_ci(CIContext(m, parse_degrees(degrees), a, r)), common, out);
    if (*ch) return chi_command(m, degrees, a, r, ell, common, out);
    if (*st) return selftest(only, common, out);
  } catch (const OutOfTheoremScope& e) {
    err << "out of theorem scope: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << " [" << e.witness() << "]\n";
    return kExitFailure;
  } catch (const InternalContradiction& e) {
    err << "internal contradiction: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace ulrich::cli
