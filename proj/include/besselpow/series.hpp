#pragma once

#include <vector>

#include "besselpow/field_value.hpp"
#include "besselpow/rpoly.hpp"

namespace besselpow {

/// Power series in w = (z/2)^2 truncated at w^order. Coefficients past
/// the order are unknown, so every operation truncates to the smaller order.
struct TruncSeries {
  std::vector<FieldValue> coeffs;  // size order + 1

  TruncSeries() = default;
  explicit TruncSeries(std::vector<FieldValue> c);
  unsigned order() const { return static_cast<unsigned>(coeffs.size()) - 1; }
  const FieldValue& operator[](unsigned k) const { return coeffs[k]; }
  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;
};

TruncSeries series_mul(const TruncSeries& f, const TruncSeries& g);
TruncSeries series_add(const TruncSeries& f, const TruncSeries& g);
TruncSeries series_scale(const TruncSeries& f, const FieldValue& c);

/// Normalized Bessel function as a series in w: coefficient k is
/// 1/(k! (nu+1)_k). Rejects nu in {-1, -2, ...}.
TruncSeries bessel_series(const FieldValue& nu, unsigned order);

/// Requires a unit constant term; uses f * (log f)' = f'.
TruncSeries series_log(const TruncSeries& f);
/// Requires a zero constant term; uses (exp f)' = f' exp f.
TruncSeries series_exp(const TruncSeries& f);
/// 1/f by the reciprocal recurrence; requires an invertible constant term.
TruncSeries series_inverse(const TruncSeries& f);

/// f^r by Euler's recurrence. A constant term other than 1 is only
/// accepted for an integer exponent.
TruncSeries euler_pow(const TruncSeries& f, const FieldValue& r);

/// Coefficients of f^r with r kept symbolic: entry n is a polynomial in r
/// of degree <= n. Requires a unit constant term.
std::vector<RPoly> euler_pow_symbolic(const TruncSeries& f);

}  // namespace besselpow
