#include "besselpow/ratfunc.hpp"

#include <stdexcept>

namespace besselpow {

RatFunc::RatFunc(NuPoly num, NuPoly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = NuPoly::constant(1);
    return;
  }
  NuPoly g = gcd(num, den);
  if (!g.is_one()) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  Rational lead = den.lead();
  if (lead != 1) {
    Rational s = besselpow::inverse(lead);
    num *= s;
    den *= s;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RatFunc RatFunc::nu() { return RatFunc(NuPoly::linear(0)); }

Rational RatFunc::operator()(const Rational& nu) const {
  Rational d = den_(nu);
  if (d == 0) throw std::domain_error("pole at nu = " + besselpow::to_string(nu));
  return checked_div(num_(nu), d);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero rational function");
  Rational s = besselpow::inverse(num_.lead());
  return RatFunc(den_ * s, num_ * s, Reduced{});
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ + b.num_);
  NuPoly g = gcd(a.den_, b.den_);
  if (g.is_one()) {
    NuPoly n = a.num_ * b.den_ + b.num_ * a.den_;
    if (n.is_zero()) return RatFunc();
    return RatFunc(std::move(n), a.den_ * b.den_, RatFunc::Reduced{});
  }
  NuPoly bq = exact_div(a.den_, g);
  NuPoly dq = exact_div(b.den_, g);
  NuPoly t = a.num_ * dq + b.num_ * bq;
  if (t.is_zero()) return RatFunc();
  NuPoly h = gcd(t, g);
  if (!h.is_one()) {
    t = exact_div(t, h);
    g = exact_div(g, h);
  }
  return RatFunc(std::move(t), bq * dq * g, RatFunc::Reduced{});
}

RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_, RatFunc::Reduced{}); }

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  NuPoly g1 = gcd(a.num_, b.den_);
  NuPoly g2 = gcd(b.num_, a.den_);
  NuPoly n1 = g1.is_one() ? a.num_ : exact_div(a.num_, g1);
  NuPoly d2 = g1.is_one() ? b.den_ : exact_div(b.den_, g1);
  NuPoly n2 = g2.is_one() ? b.num_ : exact_div(b.num_, g2);
  NuPoly d1 = g2.is_one() ? a.den_ : exact_div(a.den_, g2);
  return RatFunc(n1 * n2, d1 * d2, RatFunc::Reduced{});
}

RatFunc operator*(const RatFunc& a, const Rational& c) {
  if (c == 0) return RatFunc();
  return RatFunc(a.num_ * c, a.den_, RatFunc::Reduced{});
}

namespace {

std::string int_poly_string(const std::vector<Integer>& p) {
  std::vector<Rational> c(p.begin(), p.end());
  return NuPoly(std::move(c)).to_string();
}

bool single_term(const std::vector<Integer>& p) {
  int terms = 0;
  for (const auto& c : p) terms += (c != 0);
  return terms <= 1;
}

// k * P with P primitive; omits unit factors.
std::string scaled(const Integer& k, const std::vector<Integer>& p) {
  bool p_is_one = p.size() == 1 && p[0] == 1;
  if (p_is_one) return k.get_str();
  std::string ps = int_poly_string(p);
  if (k == 1) return ps;
  std::string wrapped = single_term(p) ? ps : "(" + ps + ")";
  if (k == -1) return "-" + wrapped;
  return k.get_str() + "*" + wrapped;
}

bool is_compound(const Integer& k, const std::vector<Integer>& p) {
  bool p_is_one = p.size() == 1 && p[0] == 1;
  if (p_is_one) return false;
  if (k != 1) return true;
  return !single_term(p);
}

}  // namespace

std::string RatFunc::to_string() const {
  if (is_zero()) return "0";
  auto [cn, pn] = rational_content(num_);
  auto [cd, pd] = rational_content(den_);
  Rational c = cn / cd;
  std::string top = scaled(c.get_num(), pn);
  bool den_unit = c.get_den() == 1 && pd.size() == 1;
  if (den_unit) return top;
  std::string bottom = scaled(c.get_den(), pd);
  if (is_compound(c.get_den(), pd)) bottom = "(" + bottom + ")";
  if (top.find_first_of("+*") != std::string::npos ||
      top.find('-', 1) != std::string::npos) {
    top = "(" + top + ")";
  }
  return top + "/" + bottom;
}

}  // namespace besselpow
