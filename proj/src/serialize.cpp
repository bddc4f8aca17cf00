#include "besselpow/serialize.hpp"

#include <stdexcept>

namespace besselpow {

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const NuPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

Json to_json(const RatFunc& f) {
  Json out = Json::object();
  out["num"] = to_json(f.num());
  out["den"] = to_json(f.den());
  return out;
}

Json to_json(const FieldValue& v) {
  if (v.is_symbolic()) return to_json(v.ratfunc());
  return to_json(v.rational());
}

Json to_json(const RPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

Json to_json(const TruncSeries& s) {
  Json out = Json::object();
  out["order"] = s.order();
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs) coeffs.push_back(to_json(c));
  out["coeffs"] = std::move(coeffs);
  return out;
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational must be a JSON string");
  return parse_rational(j.get<std::string>());
}

NuPoly nupoly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial in nu must be a JSON array");
  std::vector<Rational> c;
  c.reserve(j.size());
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return NuPoly(std::move(c));
}

RatFunc ratfunc_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw std::invalid_argument("rational function must be {\"num\": [...], \"den\": [...]}");
  }
  try {
    return RatFunc(nupoly_from_json(j.at("num")), nupoly_from_json(j.at("den")));
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(e.what());
  }
}

FieldValue field_value_from_json(const Json& j) {
  if (j.is_string()) return FieldValue(rational_from_json(j));
  return FieldValue(ratfunc_from_json(j));
}

RPoly rpoly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial in r must be a JSON array");
  std::vector<FieldValue> c;
  c.reserve(j.size());
  for (const auto& x : j) c.push_back(field_value_from_json(x));
  return RPoly(std::move(c));
}

TruncSeries series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs") ||
      !j.at("coeffs").is_array() || !j.at("order").is_number_unsigned()) {
    throw std::invalid_argument("series must be {\"order\": N, \"coeffs\": [...]}");
  }
  const auto& coeffs = j.at("coeffs");
  if (coeffs.size() != j.at("order").get<std::size_t>() + 1) {
    throw std::invalid_argument("series coefficient count must be order + 1");
  }
  std::vector<FieldValue> c;
  c.reserve(coeffs.size());
  for (const auto& x : coeffs) c.push_back(field_value_from_json(x));
  return TruncSeries(std::move(c));
}

}  // namespace besselpow
