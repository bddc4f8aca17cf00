#pragma once

#include <string>
#include <utility>
#include <vector>

#include "besselpow/rational.hpp"

namespace besselpow {

/// Dense univariate polynomial in the Bessel order nu with rational
/// coefficients, stored ascending. The zero polynomial has no coefficients,
/// so the leading coefficient of a nonzero value is never zero.
class NuPoly {
 public:
  NuPoly() = default;
  explicit NuPoly(std::vector<Rational> ascending);

  static NuPoly constant(const Rational& c);
  static NuPoly monomial(const Rational& c, int degree);
  /// nu + shift
  static NuPoly linear(const Rational& shift);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& lead() const { return coeffs_.back(); }

  Rational operator()(const Rational& nu) const;

  NuPoly monic() const;

  NuPoly& operator+=(const NuPoly& o);
  NuPoly& operator-=(const NuPoly& o);
  NuPoly& operator*=(const Rational& c);

  friend NuPoly operator+(NuPoly a, const NuPoly& b) { return a += b; }
  friend NuPoly operator-(NuPoly a, const NuPoly& b) { return a -= b; }
  friend NuPoly operator-(NuPoly a) { return a *= Rational(-1); }
  friend NuPoly operator*(const NuPoly& a, const NuPoly& b);
  friend NuPoly operator*(NuPoly a, const Rational& c) { return a *= c; }
  friend NuPoly operator*(const Rational& c, NuPoly a) { return a *= c; }
  friend bool operator==(const NuPoly& a, const NuPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable ascending form, e.g. "2+3*nu+nu^2".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Polynomial long division over Q; divisor must be nonzero.
std::pair<NuPoly, NuPoly> divmod(const NuPoly& a, const NuPoly& b);
/// Quotient of an exact division; throws std::domain_error on a remainder.
NuPoly exact_div(const NuPoly& a, const NuPoly& b);
/// Monic gcd (zero only when both inputs are zero).
NuPoly gcd(const NuPoly& a, const NuPoly& b);
NuPoly pow(const NuPoly& base, unsigned exponent);

/// Splits p into c * q with q an integer polynomial of content 1 and
/// positive leading coefficient. p must be nonzero.
std::pair<Rational, std::vector<Integer>> rational_content(const NuPoly& p);

}  // namespace besselpow
