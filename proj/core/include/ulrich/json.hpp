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

#ifndef ULRICH_JSON_HPP
#define ULRICH_JSON_HPP

// JSON encodings. Rationals are strings "p/q" (or "p" when integral) so
// values survive a round trip exactly; object keys come out sorted, which
// keeps the output byte-for-byte stable.

#include <nlohmann/json.hpp>

#include "ulrich/appendix.hpp"
#include "ulrich/certifier.hpp"
#include "ulrich/invariants.hpp"
#include "ulrich/rational.hpp"
#include "ulrich/sparse_poly.hpp"
#include "ulrich/symmetric.hpp"

namespace ulrich {

using Json = nlohmann::json;

void to_json(Json& j, const Rational& q);
void from_json(const Json& j, Rational& q);

/// {"nvars": n, "terms": [[[e_1, ..., e_n], "p/q"], ...]} in graded-lex order.
void to_json(Json& j, const SparsePoly& p);
void from_json(const Json& j, SparsePoly& p);

/// {"nvars": n, "terms": [[[parts...], "p/q"], ...]}, heaviest partition first.
void to_json(Json& j, const BasisExpr& b);

void to_json(Json& j, const VerificationReport& r);
/// Summary only; the value grid is included when `with_values` is set.
Json vreport_json(const VReport& r, bool with_values = false);
void to_json(Json& j, const CIContext& ctx);
void to_json(Json& j, const UlrichNumerics& n);
void to_json(Json& j, const Certificate& c);

}  // namespace ulrich

#endif  // ULRICH_JSON_HPP
