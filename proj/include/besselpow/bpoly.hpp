#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "besselpow/field_value.hpp"
#include "besselpow/rpoly.hpp"
#include "besselpow/zeta.hpp"

namespace besselpow {

// B_n^{(nu)}(r) is defined by
//   [I~_nu(z)]^r = sum_n B_n(r) / (n! (nu+1)_n) w^n,   w = (z/2)^2,
// where I~_nu is the normalized modified Bessel function. Every route below
// returns the list B_0, ..., B_{n_max} as polynomials in r.

enum class RouteId { SeriesEuler, BellFormula, ZetaPochhammer, StepInterp, BinomialRecurrence, BenderAsPrinted };

/// Short CLI names: series, bell, pochhammer, step, binomial, bender.
std::string_view route_name(RouteId id);
std::optional<RouteId> parse_route(std::string_view name);
/// Every route except BenderAsPrinted.
const std::vector<RouteId>& agreeing_routes();
const std::vector<RouteId>& all_routes();

/// A_n(r+1) = sum_j C(n,j) a_n/(a_j a_{n-j}) A_j(r) for f = sum z^n/(a_n n!).
FieldValue generic_power_step(const std::vector<FieldValue>& a,
                              const std::vector<FieldValue>& a_at_r, unsigned n);

/// Oracle: Euler's power recurrence on the Bessel series with symbolic r.
std::vector<RPoly> b_via_series(const FieldValue& nu, unsigned n_max);
/// 4^n (nu+1)_n times the complete Bell polynomial of the log coefficients.
std::vector<RPoly> b_via_bell(unsigned n_max, ZetaTable& table);
/// Recurrence in the zeta values with a (nu+n-k)_{k+1} Pochhammer factor.
std::vector<RPoly> b_via_pochhammer(unsigned n_max, ZetaTable& table);
/// B_n = sum_{k=1}^n [k(r+1)/n - 1] C(n,k) (nu+1)_n/((nu+1)_k (nu+1)_{n-k}) B_{n-k}.
std::vector<RPoly> b_via_binomial_recurrence(const FieldValue& nu, unsigned n_max);

/// Values B_0(r+1)..B_n(r+1) from B_0(r)..B_n(r) via the unit step in r.
std::vector<FieldValue> b_step_all(const FieldValue& nu, const std::vector<FieldValue>& b_at_r);
/// B_n(r+1) alone.
FieldValue b_step(const FieldValue& nu, const std::vector<FieldValue>& b_at_r, unsigned n);
/// Steps from B(1) = 1 and interpolates each B_n on the nodes r = 0..n.
std::vector<RPoly> b_via_step_interp(const FieldValue& nu, unsigned n_max);

/// The recurrence attributed to Bender et al. evaluated literally as printed,
/// with b_j(nu) from its zeta closed form. Disagrees with the other routes
/// from n = 2 on; it is kept to document that.
std::vector<RPoly> b_bender_as_printed(const FieldValue& nu, unsigned n_max);
FieldValue b_bender_as_printed(const FieldValue& nu, unsigned n, const FieldValue& r);

std::vector<RPoly> b_polys(RouteId route, const FieldValue& nu, unsigned n_max);

/// (2n)! / (n! 4^n (nu+1)_n)
FieldValue tilde_factor(const FieldValue& nu, unsigned n);
RPoly normalize_tilde(const RPoly& b, const FieldValue& nu, unsigned n);

/// With the (2n)! normalization the addition law carries C(2n,2k), as for
/// even moments of a sum of independent symmetric variables. The C(n,k)
/// form holds only for n <= 1 and is reported separately.
struct BinomialTypeVerdict {
  bool normalized = false;   // B~_n(r+s) = sum C(2n,2k) B~_k(r) B~_{n-k}(s)
  bool cholewinski = false;  // B_n(r+s) = sum (b_2n / (b_2k b_{2n-2k})) B_k(r) B_{n-k}(s)
  bool normalized_as_printed = false;  // B~_n(r+s) = sum C(n,k) B~_k(r) B~_{n-k}(s)
  explicit operator bool() const { return normalized && cholewinski; }
};

/// Checks both forms on the grid (r, s) in {0..n}^2, which determines a
/// polynomial of degree <= n in each variable.
BinomialTypeVerdict binomial_type_check(const FieldValue& nu, unsigned n,
                                        const std::vector<RPoly>& b);
BinomialTypeVerdict binomial_type_check(const FieldValue& nu, unsigned n);

/// (x*y)^{2n} = sum_k C_nu(n,k) x^{2k} y^{2n-2k}
FieldValue cholewinski_convolution(const FieldValue& x, const FieldValue& y, unsigned n,
                                   const FieldValue& nu);

/// W_n(s) for even s: B_{s/2}^{(0)}(n). Odd s throws std::invalid_argument.
Rational walk_moment(unsigned steps, unsigned s);

/// E (X_1 + ... + X_r)^{2n} = B~_n(r) for the symmetric beta variables.
FieldValue moment_of_sum(const FieldValue& nu, unsigned r, unsigned n);

}  // namespace besselpow
