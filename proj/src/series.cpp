#include "besselpow/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "besselpow/combinatorics.hpp"

namespace besselpow {

namespace {

void require_nonempty(const TruncSeries& f) {
  if (f.coeffs.empty()) throw std::invalid_argument("series has no coefficients");
}

void require_same_field(const TruncSeries& f, const TruncSeries& g) {
  require_nonempty(f);
  require_nonempty(g);
  if (f[0].is_symbolic() != g[0].is_symbolic()) {
    throw std::invalid_argument("mixed field tags in series operation");
  }
}

FieldValue field_pow(const FieldValue& base, long exponent) {
  if (exponent < 0) return field_pow(base.inverse(), -exponent);
  FieldValue out = base.one();
  for (long i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace

TruncSeries::TruncSeries(std::vector<FieldValue> c) : coeffs(std::move(c)) {
  if (coeffs.empty()) throw std::invalid_argument("series needs at least a constant term");
}

TruncSeries series_mul(const TruncSeries& f, const TruncSeries& g) {
  require_same_field(f, g);
  const unsigned n = std::min(f.order(), g.order());
  std::vector<FieldValue> out(n + 1, f[0].zero());
  for (unsigned i = 0; i <= n; ++i) {
    if (f[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= n; ++j) out[i + j] += f[i] * g[j];
  }
  return TruncSeries(std::move(out));
}

TruncSeries series_add(const TruncSeries& f, const TruncSeries& g) {
  require_same_field(f, g);
  const unsigned n = std::min(f.order(), g.order());
  std::vector<FieldValue> out;
  out.reserve(n + 1);
  for (unsigned i = 0; i <= n; ++i) out.push_back(f[i] + g[i]);
  return TruncSeries(std::move(out));
}

TruncSeries series_scale(const TruncSeries& f, const FieldValue& c) {
  std::vector<FieldValue> out;
  out.reserve(f.coeffs.size());
  for (const auto& x : f.coeffs) out.push_back(x * c);
  return TruncSeries(std::move(out));
}

TruncSeries bessel_series(const FieldValue& nu, unsigned order) {
  if (!nu.is_symbolic() && nu.is_integer() && nu.rational() <= -1) {
    throw std::domain_error("bessel_series: nu = " + nu.to_string() +
                            " is a negative integer (Pochhammer symbol vanishes)");
  }
  std::vector<FieldValue> out;
  out.reserve(order + 1);
  FieldValue term = nu.one();
  const FieldValue shift = nu + nu.one();
  out.push_back(term);
  for (unsigned k = 1; k <= order; ++k) {
    // c_k = c_{k-1} / (k (nu + k))
    term /= (shift + nu.constant(k - 1)) * Rational(k);
    out.push_back(term);
  }
  return TruncSeries(std::move(out));
}

TruncSeries series_log(const TruncSeries& f) {
  require_nonempty(f);
  if (!f[0].is_one()) throw std::domain_error("series_log requires constant term 1");
  const unsigned n = f.order();
  std::vector<FieldValue> log(n + 1, f[0].zero());
  for (unsigned k = 1; k <= n; ++k) {
    FieldValue acc = f[k] * Rational(k);
    for (unsigned j = 1; j < k; ++j) {
      if (log[j].is_zero() || f[k - j].is_zero()) continue;
      acc -= log[j] * f[k - j] * Rational(j);
    }
    log[k] = acc * make_rational(1, k);
  }
  return TruncSeries(std::move(log));
}

TruncSeries series_exp(const TruncSeries& f) {
  require_nonempty(f);
  if (!f[0].is_zero()) throw std::domain_error("series_exp requires constant term 0");
  const unsigned n = f.order();
  std::vector<FieldValue> e(n + 1, f[0].zero());
  e[0] = f[0].one();
  for (unsigned k = 1; k <= n; ++k) {
    FieldValue acc = f[0].zero();
    for (unsigned j = 1; j <= k; ++j) {
      if (f[j].is_zero()) continue;
      acc += f[j] * e[k - j] * Rational(j);
    }
    e[k] = acc * make_rational(1, k);
  }
  return TruncSeries(std::move(e));
}

TruncSeries series_inverse(const TruncSeries& f) {
  require_nonempty(f);
  const FieldValue inv0 = f[0].inverse();
  const unsigned n = f.order();
  std::vector<FieldValue> g(n + 1, f[0].zero());
  g[0] = inv0;
  for (unsigned k = 1; k <= n; ++k) {
    FieldValue acc = f[0].zero();
    for (unsigned j = 1; j <= k; ++j) acc += f[j] * g[k - j];
    g[k] = -(acc * inv0);
  }
  return TruncSeries(std::move(g));
}

TruncSeries euler_pow(const TruncSeries& f, const FieldValue& r) {
  require_nonempty(f);
  if (f[0].is_zero()) throw std::domain_error("euler_pow requires a nonzero constant term");
  if (f[0].is_symbolic() != r.is_symbolic()) {
    throw std::invalid_argument("mixed field tags in euler_pow");
  }
  FieldValue d0 = f[0].one();
  if (!f[0].is_one()) {
    if (!r.is_integer()) {
      throw std::domain_error("euler_pow: c_0 != 1 needs an integer exponent");
    }
    Rational e = r.is_symbolic() ? r.ratfunc().num().coeff(0) : r.rational();
    d0 = field_pow(f[0], e.get_num().get_si());
  }
  const unsigned n_max = f.order();
  const FieldValue inv0 = f[0].inverse();
  const FieldValue r1 = r + r.one();
  std::vector<FieldValue> d(n_max + 1, f[0].zero());
  d[0] = d0;
  for (unsigned n = 1; n <= n_max; ++n) {
    FieldValue acc = f[0].zero();
    for (unsigned k = 1; k <= n; ++k) {
      if (f[k].is_zero()) continue;
      FieldValue weight = r1 * make_rational(k, n) - r.one();
      acc += weight * f[k] * d[n - k];
    }
    d[n] = acc * inv0;
  }
  return TruncSeries(std::move(d));
}

std::vector<RPoly> euler_pow_symbolic(const TruncSeries& f) {
  require_nonempty(f);
  if (!f[0].is_one()) {
    throw std::domain_error("euler_pow_symbolic requires constant term 1 (d_0 = 1)");
  }
  const FieldValue unit = f[0].one();
  const unsigned n_max = f.order();
  std::vector<RPoly> d;
  d.reserve(n_max + 1);
  d.push_back(RPoly::constant(unit));
  for (unsigned n = 1; n <= n_max; ++n) {
    RPoly acc;
    for (unsigned k = 1; k <= n; ++k) {
      if (f[k].is_zero()) continue;
      // k(r+1)/n - 1 = (k/n - 1) + (k/n) r
      Rational ratio = make_rational(k, n);
      RPoly weight = RPoly::linear(unit * Rational(ratio - 1), unit * ratio);
      acc += weight * d[n - k] * f[k];
    }
    d.push_back(std::move(acc));
  }
  return d;
}

}  // namespace besselpow
