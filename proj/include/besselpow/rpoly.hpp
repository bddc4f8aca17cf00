#pragma once

#include <string>
#include <vector>

#include "besselpow/field_value.hpp"

namespace besselpow {

/// Polynomial in the power r with coefficients in the active field, stored
/// ascending. The zero polynomial is empty.
class RPoly {
 public:
  RPoly() = default;
  explicit RPoly(std::vector<FieldValue> ascending);
  static RPoly constant(const FieldValue& c);
  /// The indeterminate r over the field of `unit`.
  static RPoly r(const FieldValue& unit);
  /// a + b*r
  static RPoly linear(const FieldValue& a, const FieldValue& b);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<FieldValue>& coeffs() const { return coeffs_; }
  /// Coefficient of r^i; `unit` supplies the field for indices past the degree.
  FieldValue coeff(int i, const FieldValue& unit) const;

  FieldValue operator()(const FieldValue& r) const;
  /// Substitutes a concrete nu into every coefficient.
  RPoly at_nu(const Rational& nu) const;

  RPoly& operator+=(const RPoly& o);
  RPoly& operator-=(const RPoly& o);
  RPoly& operator*=(const FieldValue& c);
  RPoly& operator*=(const Rational& c);

  friend RPoly operator+(RPoly a, const RPoly& b) { return a += b; }
  friend RPoly operator-(RPoly a, const RPoly& b) { return a -= b; }
  friend RPoly operator*(const RPoly& a, const RPoly& b);
  friend RPoly operator*(RPoly a, const FieldValue& c) { return a *= c; }
  friend RPoly operator*(RPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const RPoly& a, const RPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

  /// Unique polynomial of degree <= nodes.size()-1 through (nodes[i], values[i]).
  static RPoly interpolate(const std::vector<Rational>& nodes,
                           const std::vector<FieldValue>& values);

 private:
  void trim();
  std::vector<FieldValue> coeffs_;
};

}  // namespace besselpow
