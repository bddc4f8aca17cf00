#include "besselpow/sequences.hpp"

#include <stdexcept>

#include "besselpow/combinatorics.hpp"

namespace besselpow {

namespace {

Rational require_integer(const Rational& x, const std::string& what) {
  if (!is_integer(x)) {
    throw std::logic_error(what + " = " + to_string(x) + " is not an integer");
  }
  return x;
}

FieldValue shifted_nu(const FieldValue& nu) { return nu + nu.one(); }

}  // namespace

std::string_view seq_name(SeqName name) {
  switch (name) {
    case SeqName::M: return "M";
    case SeqName::ATilde: return "a_tilde";
    case SeqName::BNu: return "b_nu";
    case SeqName::BTilde: return "b_tilde";
  }
  return "?";
}

SeqName parse_seq_name(std::string_view text) {
  for (SeqName n : {SeqName::M, SeqName::ATilde, SeqName::BNu, SeqName::BTilde}) {
    if (seq_name(n) == text) return n;
  }
  throw std::invalid_argument("unknown sequence '" + std::string(text) +
                              "' (expected M, a_tilde, b_nu or b_tilde)");
}

Rational m_closed(unsigned k, ZetaTable& zeta_one) {
  if (k == 0) throw std::invalid_argument("M_k needs k >= 1");
  Rational scale = Rational(factorial(k) * factorial(k + 1)) * pow(Rational(4), k);
  Rational m = zeta_one.get(k).rational() * scale;
  return require_integer(m, "M_" + std::to_string(k));
}

Rational m_closed(unsigned k) {
  ZetaTable table(FieldValue(Rational(1)));
  return m_closed(k, table);
}

std::vector<Rational> m_recurrence_table(unsigned k) {
  std::vector<Rational> m;
  m.reserve(k);
  for (unsigned n = 1; n <= k; ++n) {
    if (n <= 2) {
      m.emplace_back(1);
      continue;
    }
    Rational acc = 0;
    for (unsigned r = 1; r < n; ++r) {
      Integer c = binomial(n, r);
      Rational w(c * c, Integer((r + 1) * (n - r + 1)));
      w.canonicalize();
      acc += w * m[r - 1] * m[n - r - 1];
    }
    m.push_back(acc);
  }
  return m;
}

Rational m_recurrence(unsigned k) {
  if (k == 0) throw std::invalid_argument("M_k needs k >= 1");
  return m_recurrence_table(k).back();
}

Rational a_tilde(unsigned n, ZetaTable& zeta_one) {
  if (n == 0) throw std::invalid_argument("a_tilde needs n >= 1");
  Rational scale = Rational(factorial(n + 1) * factorial(n - 1)) * pow(Rational(2), 2 * n + 1);
  Rational a = zeta_one.get(n).rational() * scale;
  return require_integer(a, "a_tilde_" + std::to_string(n));
}

Rational a_tilde(unsigned n) {
  ZetaTable table(FieldValue(Rational(1)));
  return a_tilde(n, table);
}

FieldValue b_nu(unsigned n, const FieldValue& nu, ZetaTable& zeta_shifted) {
  if (n < 2) throw std::invalid_argument("b_nu needs n >= 2");
  const FieldValue nu1 = shifted_nu(nu);
  if (nu1.is_zero()) throw std::domain_error("b_nu: pole at nu = -1");
  Rational scale = Rational(factorial(n - 1)) * pow(Rational(4), n - 1);
  if (n % 2 == 1) scale = -scale;
  FieldValue prefactor = pochhammer(nu + nu.constant(2), n - 1) / nu1;
  return prefactor * zeta_shifted.get(n - 1) * scale;
}

FieldValue b_nu(unsigned n, const FieldValue& nu) {
  ZetaTable table(shifted_nu(nu));
  return b_nu(n, nu, table);
}

namespace {

void require_natural(const Rational& nu) {
  if (!is_integer(nu) || nu < 0) {
    throw std::invalid_argument("b_tilde needs a nonnegative integer nu (got " + to_string(nu) +
                                ")");
  }
}

}  // namespace

Rational b_tilde(unsigned n, const Rational& nu, ZetaTable& symbolic_table) {
  if (n < 2) throw std::invalid_argument("b_tilde needs n >= 2");
  require_natural(nu);
  return rayleigh_phi(n - 1, symbolic_table)(nu + 1);
}

Rational b_tilde(unsigned n, const Rational& nu) {
  ZetaTable table(FieldValue::symbolic_nu());
  return b_tilde(n, nu, table);
}

Rational b_tilde_displayed_product(unsigned n, const Rational& nu) {
  if (n < 2) throw std::invalid_argument("b_tilde needs n >= 2");
  require_natural(nu);
  const FieldValue v(nu);
  FieldValue b = b_nu(n, v);
  // (nu+1)! (nu+1) / ((nu+n)! (n-1)!) = (nu+1) / ((nu+2)_{n-1} (n-1)!)
  FieldValue normalizer = (v + v.one()) / (pochhammer(v + v.constant(2), n - 1) *
                                           Rational(factorial(n - 1)));
  Rational product = 1;
  for (unsigned k = 1; k <= n; ++k) product *= pow(Rational(k) + nu, n / k);
  Rational out = (b * normalizer).rational() * product;
  if (n % 2 == 1) out = -out;
  return out;
}

std::vector<SeqRecord> sequence_records(SeqName name, unsigned max, const FieldValue& nu) {
  std::vector<SeqRecord> out;
  switch (name) {
    case SeqName::M: {
      ZetaTable table(FieldValue(Rational(1)));
      for (unsigned k = 1; k <= max; ++k) out.push_back({name, k, m_closed(k, table), true});
      break;
    }
    case SeqName::ATilde: {
      ZetaTable table(FieldValue(Rational(1)));
      for (unsigned k = 1; k <= max; ++k) out.push_back({name, k, a_tilde(k, table), true});
      break;
    }
    case SeqName::BNu: {
      ZetaTable table(shifted_nu(nu));
      for (unsigned k = 2; k <= max; ++k) {
        FieldValue v = b_nu(k, nu, table);
        out.push_back({name, k, v, v.is_integer()});
      }
      break;
    }
    case SeqName::BTilde: {
      if (nu.is_symbolic()) throw std::invalid_argument("b_tilde needs a concrete integer nu");
      require_natural(nu.rational());
      ZetaTable table(FieldValue::symbolic_nu());
      for (unsigned k = 2; k <= max; ++k) {
        Rational v = rayleigh_phi(k - 1, table)(nu.rational() + 1);
        out.push_back({name, k, v, is_integer(v)});
      }
      break;
    }
  }
  return out;
}

std::string to_bfile(const std::vector<SeqRecord>& records) {
  std::string out;
  for (const auto& rec : records) {
    if (!rec.value.is_integer()) {
      throw std::invalid_argument("b-file rows must be integers; " + std::string(seq_name(rec.name)) +
                                  "(" + std::to_string(rec.index) + ") = " + rec.value.to_string());
    }
    out += std::to_string(rec.index) + " " + rec.value.to_string() + "\n";
  }
  return out;
}

}  // namespace besselpow
