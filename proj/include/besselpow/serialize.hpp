#pragma once

#include <json.hpp>

#include "besselpow/field_value.hpp"
#include "besselpow/rpoly.hpp"
#include "besselpow/series.hpp"

namespace besselpow {

using Json = nlohmann::ordered_json;

// Wire formats:
//   Rational   "p/q", or "p" when q == 1
//   NuPoly     ascending array of Rational strings ([] for zero)
//   RatFunc    {"num": NuPoly, "den": NuPoly}
//   FieldValue a Rational string or a RatFunc object
//   RPoly      ascending array of FieldValue
//   TruncSeries {"order": N, "coeffs": [FieldValue; N+1]}
// Every *_from_json throws std::invalid_argument on malformed input.

Json to_json(const Rational& x);
Json to_json(const NuPoly& p);
Json to_json(const RatFunc& f);
Json to_json(const FieldValue& v);
Json to_json(const RPoly& p);
Json to_json(const TruncSeries& s);

Rational rational_from_json(const Json& j);
NuPoly nupoly_from_json(const Json& j);
RatFunc ratfunc_from_json(const Json& j);
FieldValue field_value_from_json(const Json& j);
RPoly rpoly_from_json(const Json& j);
TruncSeries series_from_json(const Json& j);

}  // namespace besselpow
