#include "besselpow/bpoly.hpp"

#include <stdexcept>
#include <string>

#include "besselpow/bell.hpp"
#include "besselpow/combinatorics.hpp"
#include "besselpow/sequences.hpp"
#include "besselpow/series.hpp"

namespace besselpow {

namespace {

constexpr std::string_view kRouteNames[] = {"series", "bell", "pochhammer", "step", "binomial", "bender"};

FieldValue shift(const FieldValue& nu, long k) { return nu + nu.constant(k); }

// C(n,k) (nu+1)_n / ((nu+1)_k (nu+1)_{n-k}) for 0 <= k <= n <= n_max.
std::vector<std::vector<FieldValue>> cholewinski_rows(const FieldValue& nu, unsigned n_max) {
  std::vector<std::vector<FieldValue>> rows(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    rows[n].reserve(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
      if (2 * k > n) {
        rows[n].push_back(rows[n][n - k]);
      } else {
        rows[n].push_back(cholewinski_binom(n, k, nu));
      }
    }
  }
  return rows;
}

void require_not_pole(const FieldValue& nu) {
  if (!nu.is_symbolic() && is_integer(nu.rational()) && nu.rational() <= -1) {
    throw std::domain_error("nu = " + nu.to_string() + " is a negative integer (pole)");
  }
}

}  // namespace

std::string_view route_name(RouteId id) { return kRouteNames[static_cast<int>(id)]; }

std::optional<RouteId> parse_route(std::string_view name) {
  for (RouteId id : all_routes()) {
    if (route_name(id) == name) return id;
  }
  return std::nullopt;
}

const std::vector<RouteId>& agreeing_routes() {
  static const std::vector<RouteId> routes{RouteId::SeriesEuler, RouteId::BellFormula,
                                           RouteId::ZetaPochhammer, RouteId::StepInterp,
                                           RouteId::BinomialRecurrence};
  return routes;
}

const std::vector<RouteId>& all_routes() {
  static const std::vector<RouteId> routes{RouteId::SeriesEuler, RouteId::BellFormula,
                                           RouteId::ZetaPochhammer,   RouteId::StepInterp,
                                           RouteId::BinomialRecurrence,     RouteId::BenderAsPrinted};
  return routes;
}

FieldValue generic_power_step(const std::vector<FieldValue>& a,
                              const std::vector<FieldValue>& a_at_r, unsigned n) {
  if (a_at_r.size() <= n) throw std::invalid_argument("generic_power_step needs A_0(r)..A_n(r)");
  FieldValue acc = a_at_r[0].zero();
  for (unsigned j = 0; j <= n; ++j) acc += generalized_binom(n, j, a) * a_at_r[j];
  return acc;
}

std::vector<RPoly> b_via_series(const FieldValue& nu, unsigned n_max) {
  std::vector<RPoly> d = euler_pow_symbolic(bessel_series(nu, n_max));
  FieldValue scale = nu.one();
  const FieldValue nu1 = shift(nu, 1);
  for (unsigned n = 1; n <= n_max; ++n) {
    // n! (nu+1)_n, built incrementally
    scale *= shift(nu1, n - 1) * Rational(n);
    d[n] *= scale;
  }
  return d;
}

std::vector<RPoly> b_via_bell(unsigned n_max, ZetaTable& table) {
  const FieldValue& nu = table.nu();
  require_not_pole(nu);
  BellArgs args = bell_args_for_bessel(n_max, table);
  std::vector<RPoly> bell = complete_bell_table(args, n_max, RPoly::constant(nu.one()));
  FieldValue scale = nu.one();
  const FieldValue nu1 = shift(nu, 1);
  for (unsigned n = 1; n <= n_max; ++n) {
    // 4^n (nu+1)_n
    scale *= shift(nu1, n - 1) * Rational(4);
    bell[n] *= scale;
  }
  return bell;
}

std::vector<RPoly> b_via_pochhammer(unsigned n_max, ZetaTable& table) {
  const FieldValue& nu = table.nu();
  require_not_pole(nu);
  const RPoly r = RPoly::r(nu.one());
  std::vector<RPoly> b;
  b.reserve(n_max + 1);
  b.push_back(RPoly::constant(nu.one()));
  for (unsigned n = 1; n <= n_max; ++n) {
    RPoly acc;
    for (unsigned k = 0; k < n; ++k) {
      Rational c = Rational(binomial(n - 1, k) * factorial(k)) * pow(Rational(4), k + 1);
      if (k % 2 == 1) c = -c;
      // (nu+n)! / (nu+n-k-1)! = (nu+n-k)_{k+1}
      FieldValue coeff = pochhammer(shift(nu, n - k), k + 1) * table.get(k + 1) * c;
      acc += b[n - 1 - k] * coeff;
    }
    b.push_back(acc * r);
  }
  return b;
}

std::vector<RPoly> b_via_binomial_recurrence(const FieldValue& nu, unsigned n_max) {
  require_not_pole(nu);
  const FieldValue unit = nu.one();
  const auto rows = cholewinski_rows(nu, n_max);
  std::vector<RPoly> b;
  b.reserve(n_max + 1);
  b.push_back(RPoly::constant(unit));
  for (unsigned n = 1; n <= n_max; ++n) {
    RPoly acc;
    for (unsigned k = 1; k <= n; ++k) {
      Rational ratio = make_rational(k, n);
      RPoly weight = RPoly::linear(unit * Rational(ratio - 1), unit * ratio);
      acc += weight * b[n - k] * rows[n][k];
    }
    b.push_back(std::move(acc));
  }
  return b;
}

std::vector<FieldValue> b_step_all(const FieldValue& nu, const std::vector<FieldValue>& b_at_r) {
  if (b_at_r.empty()) throw std::invalid_argument("b_step needs at least B_0(r)");
  const unsigned n_max = static_cast<unsigned>(b_at_r.size()) - 1;
  const auto rows = cholewinski_rows(nu, n_max);
  std::vector<FieldValue> next;
  next.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    FieldValue acc = nu.zero();
    for (unsigned j = 0; j <= n; ++j) acc += rows[n][j] * b_at_r[j];
    next.push_back(std::move(acc));
  }
  return next;
}

FieldValue b_step(const FieldValue& nu, const std::vector<FieldValue>& b_at_r, unsigned n) {
  if (b_at_r.size() <= n) throw std::invalid_argument("b_step needs B_0(r)..B_n(r)");
  FieldValue acc = nu.zero();
  for (unsigned j = 0; j <= n; ++j) acc += cholewinski_binom(n, j, nu) * b_at_r[j];
  return acc;
}

std::vector<RPoly> b_via_step_interp(const FieldValue& nu, unsigned n_max) {
  require_not_pole(nu);
  const auto rows = cholewinski_rows(nu, n_max);
  // values[r][m] = B_m(r) for r = 0..n_max
  std::vector<std::vector<FieldValue>> values;
  values.reserve(n_max + 1);
  std::vector<FieldValue> at_zero(n_max + 1, nu.zero());
  at_zero[0] = nu.one();
  values.push_back(std::move(at_zero));
  if (n_max >= 1) values.emplace_back(n_max + 1, nu.one());
  while (values.size() <= n_max) {
    const auto& prev = values.back();
    std::vector<FieldValue> next;
    next.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) {
      FieldValue acc = nu.zero();
      for (unsigned j = 0; j <= n; ++j) acc += rows[n][j] * prev[j];
      next.push_back(std::move(acc));
    }
    values.push_back(std::move(next));
  }
  std::vector<RPoly> b;
  b.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    std::vector<Rational> nodes;
    std::vector<FieldValue> vals;
    for (unsigned r = 0; r <= n; ++r) {
      nodes.emplace_back(r);
      vals.push_back(values[r][n]);
    }
    b.push_back(RPoly::interpolate(nodes, vals));
  }
  return b;
}

std::vector<RPoly> b_bender_as_printed(const FieldValue& nu, unsigned n_max) {
  require_not_pole(nu);
  const FieldValue unit = nu.one();
  const FieldValue nu1 = shift(nu, 1);
  const RPoly r = RPoly::r(unit);
  ZetaTable shifted(nu1);
  std::vector<FieldValue> bj(n_max + 1, nu.zero());
  for (unsigned j = 2; j <= n_max; ++j) bj[j] = b_nu(j, nu, shifted);
  std::vector<RPoly> b;
  b.reserve(n_max + 1);
  b.push_back(RPoly::constant(unit));
  for (unsigned k = 1; k <= n_max; ++k) {
    RPoly acc = r * b[k - 1] * (shift(nu, k) / nu1);
    for (unsigned j = 2; j <= k; ++j) {
      // (nu+1)!/(nu+1+j)! = 1/(nu+2)_j;  C(nu+k, j) = (nu+k-j+1)_j / j!
      FieldValue binom_nu = pochhammer(shift(nu, k - j + 1), j) *
                            inverse(Rational(factorial(j)));
      FieldValue coeff = bj[j] * make_rational(1, k) / pochhammer(shift(nu, 2), j) * binom_nu;
      acc += b[k - j] * coeff;
    }
    b.push_back(std::move(acc));
  }
  return b;
}

FieldValue b_bender_as_printed(const FieldValue& nu, unsigned n, const FieldValue& r) {
  return b_bender_as_printed(nu, n)[n](r);
}

std::vector<RPoly> b_polys(RouteId route, const FieldValue& nu, unsigned n_max) {
  switch (route) {
    case RouteId::SeriesEuler: return b_via_series(nu, n_max);
    case RouteId::BellFormula: {
      ZetaTable table(nu);
      return b_via_bell(n_max, table);
    }
    case RouteId::ZetaPochhammer: {
      ZetaTable table(nu);
      return b_via_pochhammer(n_max, table);
    }
    case RouteId::StepInterp: return b_via_step_interp(nu, n_max);
    case RouteId::BinomialRecurrence: return b_via_binomial_recurrence(nu, n_max);
    case RouteId::BenderAsPrinted: return b_bender_as_printed(nu, n_max);
  }
  throw std::invalid_argument("unknown route");
}

FieldValue tilde_factor(const FieldValue& nu, unsigned n) {
  Rational c = Rational(factorial(2 * n)) / (Rational(factorial(n)) * pow(Rational(4), n));
  return pochhammer(shift(nu, 1), n).inverse() * c;
}

RPoly normalize_tilde(const RPoly& b, const FieldValue& nu, unsigned n) {
  return b * tilde_factor(nu, n);
}

BinomialTypeVerdict binomial_type_check(const FieldValue& nu, unsigned n,
                                        const std::vector<RPoly>& b) {
  if (b.size() <= n) throw std::invalid_argument("binomial_type_check needs B_0..B_n");
  std::vector<RPoly> tilde;
  tilde.reserve(n + 1);
  for (unsigned k = 0; k <= n; ++k) tilde.push_back(normalize_tilde(b[k], nu, k));
  const auto rows = cholewinski_rows(nu, n);

  // evaluated[k][x] = B_k(x), tilde_eval[k][x] = B~_k(x), x = 0..2n
  std::vector<std::vector<FieldValue>> evaluated(n + 1), tilde_eval(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    for (unsigned x = 0; x <= 2 * n; ++x) {
      evaluated[k].push_back(b[k](nu.constant(x)));
      tilde_eval[k].push_back(tilde[k](nu.constant(x)));
    }
  }
  BinomialTypeVerdict verdict{true, true, true};
  for (unsigned r = 0; r <= n; ++r) {
    for (unsigned s = 0; s <= n; ++s) {
      FieldValue norm_rhs = nu.zero();
      FieldValue printed_rhs = nu.zero();
      FieldValue chol_rhs = nu.zero();
      for (unsigned k = 0; k <= n; ++k) {
        FieldValue prod = tilde_eval[k][r] * tilde_eval[n - k][s];
        norm_rhs += prod * Rational(binomial(2 * n, 2 * k));
        printed_rhs += prod * Rational(binomial(n, k));
        chol_rhs += evaluated[k][r] * evaluated[n - k][s] * rows[n][k];
      }
      if (!(norm_rhs == tilde_eval[n][r + s])) verdict.normalized = false;
      if (!(printed_rhs == tilde_eval[n][r + s])) verdict.normalized_as_printed = false;
      if (!(chol_rhs == evaluated[n][r + s])) verdict.cholewinski = false;
    }
  }
  return verdict;
}

BinomialTypeVerdict binomial_type_check(const FieldValue& nu, unsigned n) {
  return binomial_type_check(nu, n, b_via_series(nu, n));
}

FieldValue cholewinski_convolution(const FieldValue& x, const FieldValue& y, unsigned n,
                                   const FieldValue& nu) {
  FieldValue acc = nu.zero();
  const FieldValue x2 = x * x;
  const FieldValue y2 = y * y;
  std::vector<FieldValue> xp{nu.one()}, yp{nu.one()};
  for (unsigned k = 1; k <= n; ++k) {
    xp.push_back(xp.back() * x2);
    yp.push_back(yp.back() * y2);
  }
  for (unsigned k = 0; k <= n; ++k) acc += cholewinski_binom(n, k, nu) * xp[k] * yp[n - k];
  return acc;
}

Rational walk_moment(unsigned steps, unsigned s) {
  if (s % 2 != 0) {
    throw std::invalid_argument("walk_moment: odd moment s = " + std::to_string(s) +
                                " is not supported");
  }
  const unsigned sigma = s / 2;
  const FieldValue nu(Rational(0));
  return b_via_series(nu, sigma)[sigma](nu.constant(steps)).rational();
}

FieldValue moment_of_sum(const FieldValue& nu, unsigned r, unsigned n) {
  RPoly b = b_via_series(nu, n)[n];
  return normalize_tilde(b, nu, n)(nu.constant(r));
}

}  // namespace besselpow
