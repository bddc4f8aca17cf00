#pragma once

#include <vector>

#include "besselpow/field_value.hpp"
#include "besselpow/nupoly.hpp"

namespace besselpow {

/// Memo of zeta_nu(2n), n >= 1, filled in ascending n from
///   zeta(2) = 1/(4(nu+1)),  (nu+n) zeta(2n) = sum_{r=1}^{n-1} zeta(2r) zeta(2n-2r).
/// One table per value of nu; a table is not safe for concurrent filling.
class ZetaTable {
 public:
  /// `recurrence_sign` multiplies the convolution sum. Anything other than
  /// +1 deliberately corrupts the table; the verify harness uses -1 to
  /// check that it notices.
  explicit ZetaTable(FieldValue nu, int recurrence_sign = 1);

  const FieldValue& nu() const { return nu_; }
  /// zeta_nu(2n). Throws std::domain_error at a pole (nu + k == 0, k <= n).
  const FieldValue& get(unsigned n);
  unsigned filled() const { return static_cast<unsigned>(values_.size()); }

 private:
  FieldValue nu_;
  int sign_;
  std::vector<FieldValue> values_;  // values_[n-1] = zeta(2n)
};

FieldValue zeta_even(ZetaTable& table, unsigned n);

/// Independent route: (-1)^{n+1} n [w^n] log(bessel_series(nu, order)) / 4^n.
/// Requires order >= n >= 1.
FieldValue zeta_from_series(const FieldValue& nu, unsigned n, unsigned order);

/// All of zeta_nu(2), ..., zeta_nu(2 n_max) from a single series logarithm.
std::vector<FieldValue> zeta_from_series_all(const FieldValue& nu, unsigned n_max);

/// prod_{k=1}^n (nu+k)^{floor(n/k)}
NuPoly rayleigh_denominator(unsigned n);
/// 1 - 2n + sum_{k=1}^n floor(n/k)
int rayleigh_degree(unsigned n);

/// phi_{2n}(nu) = 4^n zeta_nu(2n) prod_{k=1}^n (nu+k)^{floor(n/k)}. Throws
/// std::logic_error if the product does not clear the denominator.
NuPoly rayleigh_phi(unsigned n, ZetaTable& symbolic_table);
NuPoly rayleigh_phi(unsigned n);

}  // namespace besselpow
