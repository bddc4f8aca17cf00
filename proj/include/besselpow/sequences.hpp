#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "besselpow/field_value.hpp"
#include "besselpow/zeta.hpp"

namespace besselpow {

enum class SeqName { M, ATilde, BNu, BTilde };

std::string_view seq_name(SeqName name);
/// Accepts "M", "a_tilde", "b_nu", "b_tilde"; throws std::invalid_argument.
SeqName parse_seq_name(std::string_view text);

struct SeqRecord {
  SeqName name;
  unsigned index;
  FieldValue value;
  bool integral;
};

/// M_k = k! (k+1)! 4^k zeta_1(2k). Throws std::logic_error if not an integer.
Rational m_closed(unsigned k);
Rational m_closed(unsigned k, ZetaTable& zeta_one);
/// M_1..M_k from M_n = sum_{r=1}^{n-1} C(n,r)^2/((r+1)(n-r+1)) M_r M_{n-r},
/// M_1 = M_2 = 1. Entry i holds M_{i+1}.
std::vector<Rational> m_recurrence_table(unsigned k);
Rational m_recurrence(unsigned k);

/// a~_n = 2^{2n+1} (n+1)! (n-1)! zeta_1(2n). Throws std::logic_error if not an integer.
Rational a_tilde(unsigned n);
Rational a_tilde(unsigned n, ZetaTable& zeta_one);

/// b_n(nu) = (nu+2)_{n-1} (n-1)! / (nu+1) * (-1)^n 4^{n-1} zeta_{nu+1}(2n-2), n >= 2.
/// `zeta_shifted` must be the table for nu+1.
FieldValue b_nu(unsigned n, const FieldValue& nu, ZetaTable& zeta_shifted);
FieldValue b_nu(unsigned n, const FieldValue& nu);

/// b~_n(nu) = phi_{2n-2}(nu+1) for integer nu >= 0, n >= 2.
Rational b_tilde(unsigned n, const Rational& nu);
Rational b_tilde(unsigned n, const Rational& nu, ZetaTable& symbolic_table);

/// The normalizing product exactly as displayed next to the integrality
/// claim: (-1)^n b_n(nu) (nu+1)!(nu+1)/((nu+n)!(n-1)!) prod_{k=1}^n (k+nu)^{floor(n/k)}.
/// Kept only to document where it departs from b_tilde.
Rational b_tilde_displayed_product(unsigned n, const Rational& nu);

/// Rows 1..max (2..max for b_nu / b_tilde).
std::vector<SeqRecord> sequence_records(SeqName name, unsigned max, const FieldValue& nu);

/// OEIS b-file rows "index value\n". Throws std::invalid_argument if a value
/// is not an integer.
std::string to_bfile(const std::vector<SeqRecord>& records);

}  // namespace besselpow
