#include "besselpow/nupoly.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace besselpow {

namespace {

using IntPoly = std::vector<Integer>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(IntPoly& p) {
  trim(p);
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

// Pseudo-remainder of a by b, reduced to its primitive part after each
// elimination step to keep coefficient growth in check.
IntPoly primitive_prem(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    Integer la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
    make_primitive(a);
  }
  return a;
}

IntPoly int_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, Integer(0));
  Integer t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

NuPoly from_int(const IntPoly& p, const Rational& scale) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& x : p) c.emplace_back(Rational(x) * scale);
  return NuPoly(std::move(c));
}

bool linear_divides(const NuPoly& linear, const NuPoly& p) {
  Rational root = -linear.coeff(0) / linear.coeff(1);
  return p(root) == 0;
}

// Exact division of integer polynomials; nullopt when b does not divide a over Z.
std::optional<IntPoly> int_exact_div(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return a.empty() ? std::optional<IntPoly>(IntPoly{}) : std::nullopt;
  IntPoly q(a.size() - db, Integer(0));
  Integer r;
  for (std::size_t i = a.size(); i-- > db;) {
    if (a[i] == 0) continue;
    mpz_fdiv_qr(q[i - db].get_mpz_t(), r.get_mpz_t(), a[i].get_mpz_t(), b.back().get_mpz_t());
    if (r != 0) return std::nullopt;
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(a[i - db + j].get_mpz_t(), q[i - db].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (a[i] != 0) return std::nullopt;
  }
  return q;
}

Integer max_norm(const IntPoly& p) {
  Integer m = 0;
  for (const auto& c : p) {
    if (abs(c) > m) m = abs(c);
  }
  return m;
}

Integer evaluate(const IntPoly& p, const Integer& x) {
  Integer acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) {
    acc *= x;
    acc += p[i];
  }
  return acc;
}

// Heuristic gcd of primitive polynomials (Char, Geddes and Gonnet): recover
// the gcd from the integer gcd of values at a large point, then confirm by
// trial division.
std::optional<IntPoly> heuristic_gcd(const IntPoly& a, const IntPoly& b) {
  Integer xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Integer h = gcd(evaluate(a, xi), evaluate(b, xi));
    IntPoly g;
    Integer half = xi / 2;
    while (h != 0) {
      Integer digit;
      mpz_fdiv_r(digit.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
      if (digit > half) digit -= xi;
      g.push_back(digit);
      h -= digit;
      mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
    }
    make_primitive(g);
    if (!g.empty() && int_exact_div(a, g) && int_exact_div(b, g)) return g;
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace

NuPoly::NuPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

NuPoly NuPoly::constant(const Rational& c) { return NuPoly(std::vector<Rational>{c}); }

NuPoly NuPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return NuPoly(std::move(v));
}

NuPoly NuPoly::linear(const Rational& shift) { return NuPoly({shift, Rational(1)}); }

void NuPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational NuPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational NuPoly::operator()(const Rational& nu) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= nu;
    acc += *it;
  }
  return acc;
}

NuPoly NuPoly::monic() const {
  if (is_zero() || lead() == 1) return *this;
  NuPoly out = *this;
  out *= inverse(lead());
  return out;
}

NuPoly& NuPoly::operator+=(const NuPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

NuPoly& NuPoly::operator-=(const NuPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

NuPoly& NuPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

NuPoly operator*(const NuPoly& a, const NuPoly& b) {
  if (a.is_zero() || b.is_zero()) return NuPoly();
  if (a.is_constant()) return b * a.lead();
  if (b.is_constant()) return a * b.lead();
  auto [ca, ia] = rational_content(a);
  auto [cb, ib] = rational_content(b);
  return from_int(int_mul(ia, ib), ca * cb);
}

std::string NuPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    std::string mag = besselpow::to_string(abs(c));
    std::string term;
    if (i == 0) {
      term = mag;
    } else {
      std::string var = i == 1 ? "nu" : "nu^" + std::to_string(i);
      term = (abs(c) == 1) ? var : mag + "*" + var;
    }
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? "-" : "+") + term;
    }
  }
  return out;
}

std::pair<Rational, std::vector<Integer>> rational_content(const NuPoly& p) {
  if (p.is_zero()) throw std::domain_error("content of the zero polynomial");
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  IntPoly ip;
  ip.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    ip.push_back(std::move(v));
  }
  Integer g = 0;
  for (const auto& c : ip) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (ip.back() < 0) g = -g;
  for (auto& c : ip) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  Rational content(g, den_lcm);
  content.canonicalize();
  return {content, std::move(ip)};
}

std::pair<NuPoly, NuPoly> divmod(const NuPoly& a, const NuPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {NuPoly(), a};
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
  Rational inv_lead = inverse(b.lead());
  const auto& bc = b.coeffs();
  for (int i = a.degree(); i >= db; --i) {
    Rational q = rem[static_cast<std::size_t>(i)] * inv_lead;
    if (q == 0) continue;
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= q * bc[static_cast<std::size_t>(j)];
    }
  }
  return {NuPoly(std::move(quo)), NuPoly(std::move(rem))};
}

NuPoly exact_div(const NuPoly& a, const NuPoly& b) {
  if (b.is_constant()) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    return a * inverse(b.lead());
  }
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

NuPoly gcd(const NuPoly& a, const NuPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return NuPoly::constant(1);
  if (a.degree() == 1) return linear_divides(a, b) ? a.monic() : NuPoly::constant(1);
  if (b.degree() == 1) return linear_divides(b, a) ? b.monic() : NuPoly::constant(1);
  IntPoly x = rational_content(a).second;
  IntPoly y = rational_content(b).second;
  if (x.size() < y.size()) std::swap(x, y);
  if (auto g = heuristic_gcd(x, y)) return from_int(*g, Rational(1)).monic();
  while (!y.empty()) {
    if (y.size() == 1) return NuPoly::constant(1);
    IntPoly r = primitive_prem(std::move(x), y);
    x = std::move(y);
    y = std::move(r);
  }
  return from_int(x, Rational(1)).monic();
}

NuPoly pow(const NuPoly& base, unsigned exponent) {
  NuPoly out = NuPoly::constant(1);
  NuPoly sq = base;
  while (exponent != 0) {
    if (exponent & 1U) out = out * sq;
    exponent >>= 1U;
    if (exponent != 0) sq = sq * sq;
  }
  return out;
}

}  // namespace besselpow
