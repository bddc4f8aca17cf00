#pragma once

#include <random>
#include <vector>

#include "besselpow/field_value.hpp"
#include "besselpow/rpoly.hpp"

namespace testing_support {

using besselpow::FieldValue;
using besselpow::Rational;

inline FieldValue nu() { return FieldValue::symbolic_nu(); }
/// p/q inside Q(nu).
inline FieldValue sym(long p, long q = 1) { return nu().constant(besselpow::make_rational(p, q)); }
/// nu + s
inline FieldValue lin(long s) { return nu() + sym(s); }
inline FieldValue q(long p, long d = 1) { return FieldValue(besselpow::make_rational(p, d)); }

struct RandomRationals {
  std::mt19937 rng;
  explicit RandomRationals(unsigned seed) : rng(seed) {}
  Rational next(long span = 20, long max_den = 12) {
    std::uniform_int_distribution<long> num(-span, span), den(1, max_den);
    return besselpow::make_rational(num(rng), den(rng));
  }
  Rational nonzero(long span = 20, long max_den = 12) {
    Rational x;
    do x = next(span, max_den); while (x == 0);
    return x;
  }
  /// A random element of Q(nu): ratio of small random polynomials.
  FieldValue ratfunc(int max_deg = 3) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    auto poly = [&]() {
      FieldValue acc = sym(0), power = sym(1);
      for (int i = 0, d = deg(rng); i <= d; ++i) {
        acc += power * next();
        power *= nu();
      }
      return acc;
    };
    FieldValue den;
    do den = poly(); while (den.is_zero());
    return poly() / den;
  }
};

/// Ascending coefficients in r.
inline besselpow::RPoly rpoly(std::vector<FieldValue> c) { return besselpow::RPoly(std::move(c)); }

}  // namespace testing_support
