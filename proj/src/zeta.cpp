#include "besselpow/zeta.hpp"

#include <stdexcept>
#include <string>

#include "besselpow/series.hpp"

namespace besselpow {

ZetaTable::ZetaTable(FieldValue nu, int recurrence_sign)
    : nu_(std::move(nu)), sign_(recurrence_sign) {}

const FieldValue& ZetaTable::get(unsigned n) {
  if (n == 0) throw std::invalid_argument("zeta_even needs n >= 1");
  while (values_.size() < n) {
    const unsigned m = static_cast<unsigned>(values_.size()) + 1;
    FieldValue shift = nu_ + nu_.constant(m);
    if (shift.is_zero()) {
      throw std::domain_error("pole at nu = " + nu_.to_string() + " (nu + " +
                              std::to_string(m) + " = 0)");
    }
    if (m == 1) {
      values_.push_back((shift * Rational(4)).inverse());
      continue;
    }
    // The sum is symmetric in r <-> m-r, so only half of it is formed.
    FieldValue sum = nu_.zero();
    for (unsigned r = 1; 2 * r < m; ++r) sum += values_[r - 1] * values_[m - r - 1];
    sum *= Rational(2);
    if (m % 2 == 0) sum += values_[m / 2 - 1] * values_[m / 2 - 1];
    if (sign_ != 1) sum *= Rational(sign_);
    values_.push_back(sum / shift);
  }
  return values_[n - 1];
}

FieldValue zeta_even(ZetaTable& table, unsigned n) { return table.get(n); }

std::vector<FieldValue> zeta_from_series_all(const FieldValue& nu, unsigned n_max) {
  TruncSeries log = series_log(bessel_series(nu, n_max));
  std::vector<FieldValue> out;
  out.reserve(n_max);
  Rational four_pow = 1;
  for (unsigned n = 1; n <= n_max; ++n) {
    four_pow *= 4;
    Rational scale = Rational(n) / four_pow;
    if (n % 2 == 0) scale = -scale;
    out.push_back(log[n] * scale);
  }
  return out;
}

FieldValue zeta_from_series(const FieldValue& nu, unsigned n, unsigned order) {
  if (n == 0) throw std::invalid_argument("zeta_from_series needs n >= 1");
  if (order < n) throw std::invalid_argument("zeta_from_series needs order >= n");
  TruncSeries log = series_log(bessel_series(nu, order));
  Rational scale = Rational(n) / pow(Rational(4), n);
  if (n % 2 == 0) scale = -scale;
  return log[n] * scale;
}

NuPoly rayleigh_denominator(unsigned n) {
  NuPoly out = NuPoly::constant(1);
  for (unsigned k = 1; k <= n; ++k) out = out * pow(NuPoly::linear(k), n / k);
  return out;
}

int rayleigh_degree(unsigned n) {
  int sum = 0;
  for (unsigned k = 1; k <= n; ++k) sum += static_cast<int>(n / k);
  return 1 - 2 * static_cast<int>(n) + sum;
}

NuPoly rayleigh_phi(unsigned n, ZetaTable& symbolic_table) {
  if (n == 0) throw std::invalid_argument("rayleigh_phi needs n >= 1");
  const FieldValue& z = symbolic_table.get(n);
  const RatFunc& f = z.ratfunc();
  auto [quotient, remainder] = divmod(rayleigh_denominator(n), f.den());
  if (!remainder.is_zero()) {
    throw std::logic_error("rayleigh_phi(" + std::to_string(n) +
                           "): product does not clear the denominator of zeta");
  }
  return f.num() * quotient * pow(Rational(4), n);
}

NuPoly rayleigh_phi(unsigned n) {
  ZetaTable table(FieldValue::symbolic_nu());
  return rayleigh_phi(n, table);
}

}  // namespace besselpow
