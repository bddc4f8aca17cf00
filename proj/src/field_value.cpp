#include "besselpow/field_value.hpp"

#include <stdexcept>

namespace besselpow {

const Rational& FieldValue::rational() const {
  if (is_symbolic()) throw std::invalid_argument("expected a concrete rational field value");
  return std::get<Rational>(value_);
}

const RatFunc& FieldValue::ratfunc() const {
  if (!is_symbolic()) throw std::invalid_argument("expected a symbolic field value");
  return std::get<RatFunc>(value_);
}

FieldValue FieldValue::constant(const Rational& c) const {
  if (is_symbolic()) return FieldValue(RatFunc(c));
  return FieldValue(c);
}

bool FieldValue::is_zero() const {
  if (is_symbolic()) return std::get<RatFunc>(value_).is_zero();
  return std::get<Rational>(value_) == 0;
}

bool FieldValue::is_one() const {
  if (is_symbolic()) {
    const auto& f = std::get<RatFunc>(value_);
    return f.is_polynomial() && f.num().is_one();
  }
  return std::get<Rational>(value_) == 1;
}

bool FieldValue::is_integer() const {
  if (is_symbolic()) {
    const auto& f = std::get<RatFunc>(value_);
    return f.is_polynomial() && f.num().is_constant() && besselpow::is_integer(f.num().coeff(0));
  }
  return besselpow::is_integer(std::get<Rational>(value_));
}

FieldValue FieldValue::inverse() const {
  if (is_symbolic()) return FieldValue(std::get<RatFunc>(value_).inverse());
  return FieldValue(besselpow::inverse(std::get<Rational>(value_)));
}

FieldValue FieldValue::at(const Rational& nu) const {
  if (is_symbolic()) return FieldValue(std::get<RatFunc>(value_)(nu));
  return *this;
}

void FieldValue::require_same_tag(const FieldValue& o) const {
  if (is_symbolic() != o.is_symbolic()) {
    throw std::invalid_argument("mixed field tags: symbolic and concrete values combined");
  }
}

FieldValue& FieldValue::operator+=(const FieldValue& o) {
  require_same_tag(o);
  if (is_symbolic()) {
    value_ = std::get<RatFunc>(value_) + std::get<RatFunc>(o.value_);
  } else {
    std::get<Rational>(value_) += std::get<Rational>(o.value_);
  }
  return *this;
}

FieldValue& FieldValue::operator-=(const FieldValue& o) {
  require_same_tag(o);
  if (is_symbolic()) {
    value_ = std::get<RatFunc>(value_) - std::get<RatFunc>(o.value_);
  } else {
    std::get<Rational>(value_) -= std::get<Rational>(o.value_);
  }
  return *this;
}

FieldValue& FieldValue::operator*=(const FieldValue& o) {
  require_same_tag(o);
  if (is_symbolic()) {
    value_ = std::get<RatFunc>(value_) * std::get<RatFunc>(o.value_);
  } else {
    std::get<Rational>(value_) *= std::get<Rational>(o.value_);
  }
  return *this;
}

FieldValue& FieldValue::operator/=(const FieldValue& o) {
  require_same_tag(o);
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (is_symbolic()) {
    value_ = std::get<RatFunc>(value_) / std::get<RatFunc>(o.value_);
  } else {
    std::get<Rational>(value_) /= std::get<Rational>(o.value_);
  }
  return *this;
}

FieldValue& FieldValue::operator*=(const Rational& c) {
  if (is_symbolic()) {
    value_ = std::get<RatFunc>(value_) * c;
  } else {
    std::get<Rational>(value_) *= c;
  }
  return *this;
}

bool operator==(const FieldValue& a, const FieldValue& b) {
  if (a.is_symbolic() != b.is_symbolic()) return false;
  if (a.is_symbolic()) return std::get<RatFunc>(a.value_) == std::get<RatFunc>(b.value_);
  return std::get<Rational>(a.value_) == std::get<Rational>(b.value_);
}

std::string FieldValue::to_string() const {
  if (is_symbolic()) return std::get<RatFunc>(value_).to_string();
  return besselpow::to_string(std::get<Rational>(value_));
}

}  // namespace besselpow
