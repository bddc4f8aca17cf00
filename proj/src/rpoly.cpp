#include "besselpow/rpoly.hpp"

#include <stdexcept>

namespace besselpow {

RPoly::RPoly(std::vector<FieldValue> ascending) : coeffs_(std::move(ascending)) { trim(); }

RPoly RPoly::constant(const FieldValue& c) { return RPoly(std::vector<FieldValue>{c}); }

RPoly RPoly::r(const FieldValue& unit) { return RPoly({unit.zero(), unit.one()}); }

RPoly RPoly::linear(const FieldValue& a, const FieldValue& b) { return RPoly({a, b}); }

void RPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldValue RPoly::coeff(int i, const FieldValue& unit) const {
  if (i < 0 || i > degree()) return unit.zero();
  return coeffs_[static_cast<std::size_t>(i)];
}

FieldValue RPoly::operator()(const FieldValue& r) const {
  FieldValue acc = r.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= r;
    acc += *it;
  }
  return acc;
}

RPoly RPoly::at_nu(const Rational& nu) const {
  std::vector<FieldValue> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.at(nu));
  return RPoly(std::move(out));
}

RPoly& RPoly::operator+=(const RPoly& o) {
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    if (i < coeffs_.size()) {
      coeffs_[i] += o.coeffs_[i];
    } else {
      coeffs_.push_back(o.coeffs_[i]);
    }
  }
  trim();
  return *this;
}

RPoly& RPoly::operator-=(const RPoly& o) {
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    if (i < coeffs_.size()) {
      coeffs_[i] -= o.coeffs_[i];
    } else {
      coeffs_.push_back(-o.coeffs_[i]);
    }
  }
  trim();
  return *this;
}

RPoly& RPoly::operator*=(const FieldValue& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

RPoly& RPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

RPoly operator*(const RPoly& a, const RPoly& b) {
  if (a.is_zero() || b.is_zero()) return RPoly();
  const FieldValue unit = a.coeffs_.front().zero();
  std::vector<FieldValue> out(a.coeffs_.size() + b.coeffs_.size() - 1, unit);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return RPoly(std::move(out));
}

std::string RPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    std::string c = coeffs_[i].to_string();
    if (c.find_first_of("+-/*", 1) != std::string::npos) c = "(" + c + ")";
    std::string term;
    if (i == 0) {
      term = c;
    } else {
      std::string var = i == 1 ? "r" : "r^" + std::to_string(i);
      term = coeffs_[i].is_one() ? var : c + "*" + var;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

RPoly RPoly::interpolate(const std::vector<Rational>& nodes,
                         const std::vector<FieldValue>& values) {
  if (nodes.size() != values.size() || nodes.empty()) {
    throw std::invalid_argument("interpolate: need matching, nonempty nodes and values");
  }
  RPoly out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    // Lagrange basis polynomial for node i, with rational coefficients.
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k] -= basis[k] * nodes[j];
        next[k + 1] += basis[k];
      }
      basis = std::move(next);
      Rational diff = nodes[i] - nodes[j];
      if (diff == 0) throw std::invalid_argument("interpolate: repeated node");
      denom *= diff;
    }
    std::vector<FieldValue> term;
    term.reserve(basis.size());
    FieldValue scaled = values[i] * inverse(denom);
    for (const auto& b : basis) term.push_back(scaled * b);
    out += RPoly(std::move(term));
  }
  return out;
}

}  // namespace besselpow
