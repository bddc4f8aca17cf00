#pragma once

#include <vector>

#include "besselpow/field_value.hpp"

namespace besselpow {

// Memoized per process; safe to call from multiple threads.
Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// Rising factorial x (x+1) ... (x+n-1); 1 for n == 0.
FieldValue pochhammer(const FieldValue& x, unsigned n);

/// (nu+1)_n / ((nu+1)_j (nu+1)_{n-j}): the Gamma-function ratio
/// (n+nu)! nu! / ((nu+j)! (n-j+nu)!) written so it stays inside Q(nu).
/// Throws std::domain_error when j > n.
FieldValue factorial_ratio(unsigned n, unsigned j, const FieldValue& nu);

/// b_{2n}(nu) = 4^n n! (nu+1)_n, the reciprocal z^{2n} coefficient of the
/// normalized Bessel function.
FieldValue cholewinski_b2n(unsigned n, const FieldValue& nu);

/// b_{2n} / (b_{2k} b_{2n-2k}) = C(n,k) (nu+1)_n / ((nu+1)_k (nu+1)_{n-k}).
FieldValue cholewinski_binom(unsigned n, unsigned k, const FieldValue& nu);

/// C(n,j) a_n / (a_j a_{n-j}). Requires a.size() > n and nonzero entries.
FieldValue generalized_binom(unsigned n, unsigned j, const std::vector<FieldValue>& a);

}  // namespace besselpow
