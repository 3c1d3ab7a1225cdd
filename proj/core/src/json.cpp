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

#include "ulrich/json.hpp"

#include "ulrich/errors.hpp"

namespace ulrich {

void to_json(Json& j, const Rational& q) { j = q.to_string(); }

void from_json(const Json& j, Rational& q) {
  if (!j.is_string()) throw UsageError("expected a rational string, got " + j.dump());
  q = Rational::parse(j.get<std::string>());
}

void to_json(Json& j, const SparsePoly& p) {
  Json terms = Json::array();
  for (const auto& [mono, c] : p.terms()) {
    Json exps = Json::array();
    for (std::size_t i = 0; i < p.nvars(); ++i) exps.push_back(mono[i]);
    terms.push_back(Json::array({std::move(exps), c}));
  }
  j = Json{{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

void from_json(const Json& j, SparsePoly& p) {
  try {
    const auto nvars = j.at("nvars").get<std::size_t>();
    if (nvars > kMaxVars) throw UsageError("too many variables: " + std::to_string(nvars));
    std::vector<SparsePoly::Term> terms;
    for (const Json& t : j.at("terms")) {
      const auto exps = t.at(0).get<std::vector<unsigned>>();
      if (exps.size() != nvars) throw UsageError("exponent vector of the wrong length");
      Monomial m(nvars);
      for (std::size_t i = 0; i < nvars; ++i) m.set(i, exps[i]);
      terms.emplace_back(m, t.at(1).get<Rational>());
    }
    p = SparsePoly::from_terms(nvars, std::move(terms));
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

void to_json(Json& j, const BasisExpr& b) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : b.coeffs()) terms.push_back(Json::array({lambda.parts(), c}));
  j = Json{{"nvars", b.nvars()}, {"terms", std::move(terms)}};
}

void to_json(Json& j, const VerificationReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  Json residuals = Json::array();
  for (const auto& res : r.residuals) residuals.push_back(Json::array({res.element, res.value}));
  j = Json{{"lemma", r.lemma},
           {"parameters", std::move(params)},
           {"status", r.status()},
           {"residuals", std::move(residuals)},
           {"notes", r.notes}};
}

Json vreport_json(const VReport& r, bool with_values) {
  Json j{{"s", r.s},
         {"a", r.a},
         {"b", r.b},
         {"grid_size", r.values.size()},
         {"recursion_checked", r.recursion_checked},
         {"base_checked", r.base_checked},
         {"ones_value_checked", r.ones_value_checked},
         {"positive", r.positive},
         {"min_value", r.min_value},
         {"min_witness", r.min_witness}};
  if (with_values) {
    Json values = Json::array();
    for (const auto& [tuple, v] : r.values) values.push_back(Json::array({tuple, v}));
    j["values"] = std::move(values);
  }
  return j;
}

void to_json(Json& j, const CIContext& ctx) {
  j = Json{{"m", ctx.m()}, {"degrees", ctx.degrees()}, {"a", ctx.a()}, {"r", ctx.r()}};
}

namespace {

Json optional_json(const std::optional<Rational>& q) { return q ? Json(*q) : Json(nullptr); }

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

}  // namespace

void to_json(Json& j, const UlrichNumerics& n) {
  j = Json{{"u", n.u},
           {"e", n.e},
           {"degZ", n.degZ},
           {"kX", n.kX},
           {"c2X", n.c2X},
           {"kZ", optional_json(n.kZ)},
           {"kZH", n.kZH},
           {"kZ2", n.kZ2},
           {"c2Z", n.c2Z},
           {"chiZ_noether", n.chiZ_noether},
           {"chiZ_rr", n.chiZ_rr}};
}

void to_json(Json& j, const Certificate& c) {
  Json input;
  if (c.input.n) {
    input = Json{{"n", *c.input.n}, {"a", c.input.a}, {"r", c.input.r}};
  } else {
    input = Json{{"m", c.input.m}, {"degrees", c.input.degrees}, {"a", c.input.a}, {"r", c.input.r}};
  }
  const Witnesses& w = c.witnesses;
  Json witnesses{{"delta_chi", optional_json(w.delta_chi)},
                 {"v_value", optional_json(w.v_value)},
                 {"factor", w.factor ? Json(*w.factor) : Json(nullptr)},
                 {"interval", w.interval ? Json::array({integer_json(w.interval->first), integer_json(w.interval->second)})
                                         : Json(nullptr)},
                 {"violated", w.violated}};
  j = Json{{"input", std::move(input)},
           {"branch", branch_name(c.branch)},
           {"witnesses", std::move(witnesses)},
           {"hypotheses_attested", c.hypotheses_attested},
           {"conclusion", conclusion_name(c.conclusion)},
           {"reduced", c.reduced ? Json(*c.reduced) : Json(nullptr)},
           {"numerics", c.numerics ? Json(*c.numerics) : Json(nullptr)},
           {"notes", c.notes}};
}

}  // namespace ulrich
