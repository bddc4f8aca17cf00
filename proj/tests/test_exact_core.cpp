#include <doctest.h>

#include <stdexcept>

#include "besselpow/combinatorics.hpp"
#include "besselpow/nupoly.hpp"
#include "besselpow/ratfunc.hpp"
#include "besselpow/rational.hpp"
#include "support.hpp"

using namespace besselpow;
using namespace testing_support;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("-6/4") == make_rational(-3, 2));
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("+12")) == "12");
  CHECK(to_string(parse_rational("0/5")) == "0");
  for (const char* bad : {"", "1/0", "1.5", "abc", "1/", "/2", "--1", "2/-3", " 1"}) {
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
  }
  CHECK(make_rational(4, -6) == parse_rational("-2/3"));
  CHECK(make_rational(4, -6).get_den() == 3);
  CHECK_THROWS_AS(inverse(Rational(0)), std::domain_error);
  CHECK(pow(make_rational(-2, 3), -3) == make_rational(-27, 8));
}

TEST_CASE("nu polynomials") {
  NuPoly x = NuPoly::linear(1) * NuPoly::linear(2);
  CHECK(x.to_string() == "2+3*nu+nu^2");
  CHECK(x(Rational(1)) == 6);
  CHECK(gcd(x, NuPoly::linear(2) * NuPoly::linear(5)) == NuPoly::linear(2));
  CHECK(gcd(x * Rational(7), x * NuPoly::linear(-3)) == x);
  CHECK(gcd(x, NuPoly::linear(3)).is_one());
  CHECK(exact_div(x, NuPoly::linear(1)) == NuPoly::linear(2));
  CHECK_THROWS_AS(exact_div(x, NuPoly::linear(3)), std::domain_error);
  auto [qt, rm] = divmod(x, NuPoly::linear(3));
  CHECK(qt * NuPoly::linear(3) + rm == x);
  CHECK(NuPoly().degree() == -1);
}

TEST_CASE("polynomial gcd on larger inputs") {
  RandomRationals rnd(7);
  for (int t = 0; t < 40; ++t) {
    std::vector<Rational> a, b, g;
    for (int i = 0; i < 1 + t % 9; ++i) a.push_back(rnd.next(50, 1));
    for (int i = 0; i < 1 + (t * 5) % 8; ++i) b.push_back(rnd.next(50, 1));
    for (int i = 0; i < 1 + t % 4; ++i) g.push_back(rnd.next(9, 1));
    a.push_back(1);
    b.push_back(1);
    g.push_back(1);
    NuPoly pa(a), pb(b), pg(g);
    NuPoly h = gcd(pa * pg, pb * pg);
    // h is monic, divides both inputs, and is divisible by g
    CHECK(h.lead() == 1);
    CHECK_NOTHROW(exact_div(pa * pg, h));
    CHECK_NOTHROW(exact_div(pb * pg, h));
    CHECK_NOTHROW(exact_div(h, pg.monic()));
    // cofactors are coprime
    CHECK(gcd(exact_div(pa * pg, h), exact_div(pb * pg, h)).is_one());
  }
}

TEST_CASE("rational functions are canonical") {
  NuPoly n1 = NuPoly::linear(1), n2 = NuPoly::linear(2);
  RatFunc f(n1 * n2 * Rational(6), n1 * Rational(3));
  CHECK(f.den().is_one());
  CHECK(f.num() == n2 * Rational(2));
  RatFunc g(NuPoly::constant(1), n1 * Rational(4));
  CHECK(g.den() == n1);
  CHECK(g.num() == NuPoly::constant(make_rational(1, 4)));
  CHECK(g.to_string() == "1/(4*(1+nu))");
  CHECK(RatFunc(g.num(), g.den()) == g);
  CHECK_THROWS_AS(g(Rational(-1)), std::domain_error);
  CHECK(g(Rational(1)) == make_rational(1, 8));
  CHECK_THROWS_AS(RatFunc(n1, NuPoly()), std::domain_error);
  CHECK_THROWS_AS(RatFunc().inverse(), std::domain_error);
}

TEST_CASE("field axioms on random values") {
  RandomRationals rnd(2024);
  for (int t = 0; t < 60; ++t) {
    FieldValue x = rnd.ratfunc(), y = rnd.ratfunc(), z = rnd.ratfunc();
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + y == y + x);
    CHECK(x - x == sym(0));
    if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
    // equality agrees with the cross-multiplied numerators
    const RatFunc& a = x.ratfunc();
    const RatFunc& b = y.ratfunc();
    CHECK((x == y) == (a.num() * b.den() == b.num() * a.den()));
    // canonicalization is idempotent
    CHECK(RatFunc(a.num(), a.den()) == a);
    CHECK(a.den().lead() == 1);
    Rational at = rnd.next();
    if (a.den()(at) != 0 && b.den()(at) != 0) {
      CHECK((x * y).at(at) == FieldValue(a(at) * b(at)));
      CHECK((x + y).at(at) == FieldValue(a(at) + b(at)));
    }
  }
  for (int t = 0; t < 60; ++t) {
    FieldValue x = q(0) + FieldValue(rnd.next()), y = FieldValue(rnd.nonzero());
    CHECK((x / y) * y == x);
  }
}

TEST_CASE("mixed field tags are rejected") {
  CHECK_THROWS_AS(nu() + q(1), std::invalid_argument);
  CHECK_THROWS_AS(q(1) * nu(), std::invalid_argument);
  CHECK_THROWS_AS(nu().rational(), std::invalid_argument);
  CHECK_THROWS_AS(q(2).ratfunc(), std::invalid_argument);
  CHECK_THROWS_AS(q(1) / q(0), std::domain_error);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(lin(1), 0) == sym(1));
  CHECK(pochhammer(lin(1), 2) == nu() * nu() + sym(3) * nu() + sym(2));
  CHECK(pochhammer(q(2), 3) == q(24));
}

TEST_CASE("factorial_ratio") {
  CHECK(factorial_ratio(2, 0, nu()) == sym(1));
  CHECK(factorial_ratio(2, 1, nu()) == lin(2) / lin(1));
  CHECK(factorial_ratio(3, 1, q(0)) == q(3));
  CHECK_THROWS_AS(factorial_ratio(1, 2, nu()), std::domain_error);
  for (unsigned n = 0; n <= 10; ++n) {
    for (unsigned j = 0; j <= n; ++j) {
      CHECK(factorial_ratio(n, j, nu()) == factorial_ratio(n, n - j, nu()));
      // integer nu: (n+nu)! nu! / ((nu+j)! (n-j+nu)!)
      for (unsigned v = 0; v <= 4; ++v) {
        Rational expect = Rational(factorial(n + v) * factorial(v)) /
                          Rational(factorial(v + j) * factorial(n - j + v));
        CHECK(factorial_ratio(n, j, q(v)) == FieldValue(expect));
        CHECK(factorial_ratio(n, j, nu()).at(Rational(v)) == FieldValue(expect));
      }
    }
  }
}

TEST_CASE("cholewinski_b2n") {
  CHECK(cholewinski_b2n(0, nu()) == sym(1));
  CHECK(cholewinski_b2n(1, nu()) == sym(4) * lin(1));
  // 2^4 * 2! * (1)_2
  CHECK(cholewinski_b2n(2, q(0)) == q(64));
}

TEST_CASE("cholewinski_binom") {
  for (unsigned n = 0; n <= 5; ++n) CHECK(cholewinski_binom(n, 0, nu()) == sym(1));
  CHECK(cholewinski_binom(2, 1, q(0)) == q(4));
  CHECK(cholewinski_binom(2, 1, nu()) == sym(2) * lin(2) / lin(1));
  for (unsigned n = 0; n <= 20; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      CHECK(cholewinski_binom(n, k, nu()) * cholewinski_b2n(k, nu()) *
                cholewinski_b2n(n - k, nu()) ==
            cholewinski_b2n(n, nu()));
    }
  }
}

TEST_CASE("generalized_binom") {
  std::vector<FieldValue> ones(6, q(1)), facts;
  for (unsigned k = 0; k <= 5; ++k) facts.push_back(FieldValue(Rational(factorial(k))));
  CHECK(generalized_binom(3, 0, ones) == q(1));
  for (unsigned n = 0; n <= 5; ++n) {
    for (unsigned j = 0; j <= n; ++j) {
      CHECK(generalized_binom(n, j, ones) == FieldValue(Rational(binomial(n, j))));
    }
  }
  CHECK(generalized_binom(2, 1, facts) == q(4));
  CHECK_THROWS_AS(generalized_binom(2, 3, ones), std::domain_error);

  // With a_k = 4^k (nu+1)_k it reproduces the Cholewinski binomial; with
  // a_k = b_{2k} it picks up an extra C(n,k).
  std::vector<FieldValue> poch, b2k;
  for (unsigned k = 0; k <= 10; ++k) {
    poch.push_back(pochhammer(lin(1), k) * pow(Rational(4), k));
    b2k.push_back(cholewinski_b2n(k, nu()));
  }
  for (unsigned n = 0; n <= 10; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      CHECK(generalized_binom(n, k, poch) == cholewinski_binom(n, k, nu()));
      CHECK(generalized_binom(n, k, b2k) ==
            cholewinski_binom(n, k, nu()) * Rational(binomial(n, k)));
    }
  }
}

TEST_CASE("memoized factorials and binomials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == Integer("2432902008176640000"));
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(factorial(30) == factorial(29) * 30);
}
