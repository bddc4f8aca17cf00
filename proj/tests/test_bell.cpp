#include <doctest.h>

#include "besselpow/bell.hpp"
#include "besselpow/series.hpp"
#include "support.hpp"

using namespace besselpow;
using namespace testing_support;

TEST_CASE("complete Bell polynomials at symbolic arguments") {
  // a_k = x^k in Q(x) with x played by nu: B_2 = a1^2 + a2, B_3 = a1^3 + 3 a1 a2 + a3
  RandomRationals rnd(3);
  for (int t = 0; t < 10; ++t) {
    std::vector<FieldValue> a{rnd.ratfunc(), rnd.ratfunc(), rnd.ratfunc()};
    CHECK(complete_bell(a, 0, sym(1)) == sym(1));
    CHECK(complete_bell(a, 1, sym(1)) == a[0]);
    CHECK(complete_bell(a, 2, sym(1)) == a[0] * a[0] + a[1]);
    CHECK(complete_bell(a, 3, sym(1)) == a[0] * a[0] * a[0] + sym(3) * a[0] * a[1] + a[2]);
  }
  CHECK_THROWS(complete_bell(std::vector<FieldValue>{q(1)}, 2, q(1)));
}

TEST_CASE("Bell recurrence matches series_exp") {
  RandomRationals rnd(11);
  for (int t = 0; t < 25; ++t) {
    std::vector<FieldValue> a, g{q(0)};
    for (unsigned p = 1; p <= 6; ++p) {
      a.emplace_back(rnd.next(7, 6));
      g.push_back(a.back() * inverse(Rational(factorial(p))));
    }
    auto e = series_exp(TruncSeries(g));
    auto bell = complete_bell_table(a, 6, q(1));
    for (unsigned n = 0; n <= 6; ++n) {
      CHECK(bell[n] * inverse(Rational(factorial(n))) == e[n]);
    }
  }
}

TEST_CASE("homogeneity") {
  RandomRationals rnd(12);
  for (int trial = 0; trial < 10; ++trial) {
    Rational t = rnd.nonzero(5, 5);
    std::vector<FieldValue> a, scaled;
    for (unsigned k = 1; k <= 8; ++k) {
      a.emplace_back(rnd.next());
      scaled.push_back(a.back() * pow(t, k));
    }
    for (unsigned n = 0; n <= 8; ++n) {
      CHECK(complete_bell(scaled, n, q(1)) == complete_bell(a, n, q(1)) * pow(t, n));
    }
  }
}

TEST_CASE("bell_args_for_bessel") {
  ZetaTable t(nu());
  CHECK(bell_args_for_bessel(0, t).empty());
  auto a1 = bell_args_for_bessel(1, t);
  REQUIRE(a1.size() == 1);
  CHECK(a1[0] == RPoly({sym(0), (sym(4) * lin(1)).inverse()}));
  auto a2 = bell_args_for_bessel(2, t);
  CHECK(a2[1] == RPoly({sym(0), -(sym(16) * lin(1) * lin(1) * lin(2)).inverse()}));
}
