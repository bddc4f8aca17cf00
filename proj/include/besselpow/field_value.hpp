#pragma once

#include <string>
#include <variant>

#include "besselpow/ratfunc.hpp"
#include "besselpow/rational.hpp"

namespace besselpow {

/// A value in the active coefficient field: Q when nu is a concrete
/// rational, Q(nu) when nu is kept symbolic. Binary operations require both
/// operands to carry the same tag and throw std::invalid_argument otherwise.
class FieldValue {
 public:
  FieldValue() : value_(Rational(0)) {}
  FieldValue(Rational x) : value_(std::move(x)) {}  // NOLINT(google-explicit-constructor)
  FieldValue(RatFunc x) : value_(std::move(x)) {}   // NOLINT(google-explicit-constructor)

  /// The indeterminate nu as a symbolic field value.
  static FieldValue symbolic_nu() { return FieldValue(RatFunc::nu()); }

  bool is_symbolic() const { return std::holds_alternative<RatFunc>(value_); }
  const Rational& rational() const;
  const RatFunc& ratfunc() const;

  /// c lifted into this value's field.
  FieldValue constant(const Rational& c) const;
  FieldValue zero() const { return constant(0); }
  FieldValue one() const { return constant(1); }

  bool is_zero() const;
  bool is_one() const;
  /// True for a concrete value with denominator 1, or a symbolic value that
  /// is a constant integer.
  bool is_integer() const;

  FieldValue inverse() const;
  /// Substitutes a concrete nu; concrete values pass through unchanged.
  FieldValue at(const Rational& nu) const;

  FieldValue& operator+=(const FieldValue& o);
  FieldValue& operator-=(const FieldValue& o);
  FieldValue& operator*=(const FieldValue& o);
  FieldValue& operator/=(const FieldValue& o);
  FieldValue& operator*=(const Rational& c);

  friend FieldValue operator+(FieldValue a, const FieldValue& b) { return a += b; }
  friend FieldValue operator-(FieldValue a, const FieldValue& b) { return a -= b; }
  friend FieldValue operator*(FieldValue a, const FieldValue& b) { return a *= b; }
  friend FieldValue operator/(FieldValue a, const FieldValue& b) { return a /= b; }
  friend FieldValue operator*(FieldValue a, const Rational& c) { return a *= c; }
  friend FieldValue operator*(const Rational& c, FieldValue a) { return a *= c; }
  friend FieldValue operator-(FieldValue a) { return a *= Rational(-1); }
  friend bool operator==(const FieldValue& a, const FieldValue& b);

  /// "p/q" for a rational, display form for a rational function.
  std::string to_string() const;

 private:
  void require_same_tag(const FieldValue& o) const;
  std::variant<Rational, RatFunc> value_;
};

}  // namespace besselpow
