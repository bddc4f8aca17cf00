#pragma once

#include <string>

#include "besselpow/nupoly.hpp"

namespace besselpow {

/// Element of Q(nu) kept in lowest terms with a monic denominator, so two
/// values are equal exactly when their stored polynomials are equal.
class RatFunc {
 public:
  RatFunc() : den_(NuPoly::constant(1)) {}
  explicit RatFunc(const Rational& c) : num_(NuPoly::constant(c)), den_(NuPoly::constant(1)) {}
  explicit RatFunc(NuPoly num) : num_(std::move(num)), den_(NuPoly::constant(1)) {}
  /// Reduces to canonical form; throws std::domain_error for a zero denominator.
  RatFunc(NuPoly num, NuPoly den);

  /// The indeterminate nu.
  static RatFunc nu();

  const NuPoly& num() const { return num_; }
  const NuPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  /// Throws std::domain_error if nu is a pole.
  Rational operator()(const Rational& nu) const;

  RatFunc inverse() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  friend RatFunc operator-(const RatFunc& a);
  friend RatFunc operator*(const RatFunc& a, const Rational& c);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Display form with integer-primitive factors, e.g. "1/(4*(1+nu))".
  std::string to_string() const;

 private:
  struct Reduced {};
  RatFunc(NuPoly num, NuPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  NuPoly num_;
  NuPoly den_;
};

}  // namespace besselpow
