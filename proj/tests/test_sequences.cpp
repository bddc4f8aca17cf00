#include <doctest.h>

#include <stdexcept>

#include "besselpow/combinatorics.hpp"
#include "besselpow/sequences.hpp"
#include "support.hpp"

using namespace besselpow;
using namespace testing_support;

TEST_CASE("M_k") {
  CHECK(m_closed(1) == 1);
  CHECK(m_closed(2) == 1);
  CHECK(m_closed(3) == 3);
  CHECK(m_closed(4) == 16);
  CHECK(m_recurrence(2) == 1);
  CHECK(m_recurrence(3) == 3);
  CHECK(m_recurrence(4) == 16);
  CHECK_THROWS(m_closed(0));
  ZetaTable one(q(1));
  auto rec = m_recurrence_table(60);
  for (unsigned k = 1; k <= 60; ++k) {
    CHECK(m_closed(k, one) == rec[k - 1]);
    CHECK(is_integer(rec[k - 1]));
    CHECK(rec[k - 1] > 0);
  }
}

TEST_CASE("a_tilde") {
  CHECK(a_tilde(1) == 2);
  CHECK(a_tilde(2) == 1);
  CHECK(a_tilde(3) == 2);
  ZetaTable one(q(1));
  for (unsigned n = 1; n <= 60; ++n) {
    Rational a = a_tilde(n, one);
    CHECK(is_integer(a));
    CHECK(a > 0);
    CHECK(m_closed(n, one) == Rational(n) * a / 2);
  }
}

TEST_CASE("b_nu") {
  CHECK(b_nu(2, nu()) == lin(1).inverse());
  CHECK(b_nu(3, q(0)) == q(-1));
  CHECK(b_nu(2, q(1)) == q(1, 2));
  CHECK(b_nu(2, nu()).at(Rational(1)) == q(1, 2));
  CHECK_THROWS(b_nu(1, nu()));
  // b_n (-1)^n (nu+1) / ((nu+2)_{n-1} (n-1)!) = 4^{n-1} zeta_{nu+1}(2n-2)
  ZetaTable shifted(lin(1));
  for (unsigned n = 2; n <= 15; ++n) {
    FieldValue lhs = b_nu(n, nu(), shifted) * lin(1) /
                     (pochhammer(lin(2), n - 1) * Rational(factorial(n - 1)));
    if (n % 2 == 1) lhs = -lhs;
    CHECK(lhs == shifted.get(n - 1) * pow(Rational(4), n - 1));
  }
}

TEST_CASE("b_tilde") {
  for (long v = 0; v <= 5; ++v) CHECK(b_tilde(2, Rational(v)) == 1);
  CHECK(b_tilde(3, Rational(0)) == 1);
  CHECK(b_tilde(4, Rational(0)) == 2);
  CHECK(b_tilde(5, Rational(0)) == 16);
  CHECK(b_tilde(5, Rational(2)) == 26);
  CHECK_THROWS(b_tilde(3, make_rational(1, 2)));
  CHECK_THROWS(b_tilde(3, Rational(-1)));
  ZetaTable table(nu());
  for (long v = 0; v <= 10; ++v) {
    for (unsigned n = 2; n <= 30; ++n) {
      Rational x = b_tilde(n, Rational(v), table);
      CHECK(is_integer(x));
      CHECK(x > 0);
    }
  }
}

TEST_CASE("the displayed normalizing product is not integral") {
  CHECK(b_tilde_displayed_product(3, Rational(0)) == make_rational(1, 2));
  CHECK(b_tilde_displayed_product(3, Rational(0)) != b_tilde(3, Rational(0)));
}

TEST_CASE("records and b-files") {
  auto m = sequence_records(SeqName::M, 4, q(0));
  CHECK(to_bfile(m) == "1 1\n2 1\n3 3\n4 16\n");
  auto bt = sequence_records(SeqName::BTilde, 5, q(0));
  CHECK(to_bfile(bt) == "2 1\n3 1\n4 2\n5 16\n");
  auto bn = sequence_records(SeqName::BNu, 4, q(1, 2));
  CHECK(bn.front().index == 2);
  CHECK_FALSE(bn.front().integral);
  CHECK_THROWS_AS(to_bfile(bn), std::invalid_argument);
  CHECK_THROWS(sequence_records(SeqName::BTilde, 3, nu()));
  for (SeqName s : {SeqName::M, SeqName::ATilde, SeqName::BNu, SeqName::BTilde}) {
    CHECK(parse_seq_name(seq_name(s)) == s);
  }
  CHECK_THROWS_AS(parse_seq_name("m"), std::invalid_argument);
}
