#include <doctest.h>

#include <stdexcept>

#include "besselpow/bpoly.hpp"
#include "besselpow/serialize.hpp"
#include "besselpow/series.hpp"
#include "support.hpp"

using namespace besselpow;
using namespace testing_support;

TEST_CASE("wire format") {
  CHECK(to_json(make_rational(-3, 6)).dump() == "\"-1/2\"");
  CHECK(to_json(NuPoly::linear(2)).dump() == "[\"2\",\"1\"]");
  CHECK(to_json((sym(4) * lin(1)).inverse()).dump() == "{\"num\":[\"1/4\"],\"den\":[\"1\",\"1\"]}");
  CHECK(to_json(bessel_series(q(0), 2)).dump() == "{\"order\":2,\"coeffs\":[\"1\",\"1\",\"1/4\"]}");
  CHECK(to_json(RPoly()).dump() == "[]");
}

TEST_CASE("round trips") {
  RandomRationals rnd(8);
  for (int t = 0; t < 30; ++t) {
    FieldValue f = rnd.ratfunc();
    CHECK(field_value_from_json(to_json(f)) == f);
    FieldValue x(rnd.next());
    CHECK(field_value_from_json(to_json(x)) == x);
  }
  for (const auto& p : b_via_series(nu(), 5)) CHECK(rpoly_from_json(to_json(p)) == p);
  for (const auto& p : b_via_series(q(5, 3), 5)) CHECK(rpoly_from_json(to_json(p)) == p);
  auto s = bessel_series(nu(), 4);
  CHECK(series_from_json(to_json(s)) == s);
  // non-canonical input is canonicalized on the way in
  Json raw = Json::parse(R"({"num":["2","2"],"den":["4","4"]})");
  CHECK(ratfunc_from_json(raw) == RatFunc(Rational(make_rational(1, 2))));
}

TEST_CASE("malformed payloads") {
  for (const char* text : {"1", "\"1/0\"", "[1]", "{\"num\":[]}", "{\"num\":[\"1\"],\"den\":[]}",
                           "{\"order\":2,\"coeffs\":[\"1\"]}", "{\"order\":-1,\"coeffs\":[]}"}) {
    CAPTURE(text);
    Json j = Json::parse(text);
    CHECK_THROWS_AS(
        {
          field_value_from_json(j);
          series_from_json(j);
        },
        std::invalid_argument);
  }
  CHECK_THROWS_AS(rpoly_from_json(Json::parse("{}")), std::invalid_argument);
  CHECK_THROWS_AS(series_from_json(Json::parse("{\"order\":1,\"coeffs\":[\"1\"]}")),
                  std::invalid_argument);
}
