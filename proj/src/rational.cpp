#include "besselpow/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace besselpow {

std::string to_string(const Rational& x) { return x.get_str(); }

std::string to_string(const Integer& x) { return x.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
  }
  Integer p(std::string(num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  if (negative) p = -p;
  Rational out(p, q);
  out.canonicalize();
  return out;
}

Rational make_rational(long p, long q) {
  if (q == 0) throw std::domain_error("division by zero");
  Rational out(p, q);
  out.canonicalize();
  return out;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Rational inverse(const Rational& x) {
  if (x == 0) throw std::domain_error("division by zero");
  Rational out = 1 / x;
  return out;
}

Rational checked_div(const Rational& a, const Rational& b) {
  if (b == 0) throw std::domain_error("division by zero");
  Rational out = a / b;
  return out;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) return pow(inverse(base), -exponent);
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

}  // namespace besselpow
