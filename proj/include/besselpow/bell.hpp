#pragma once

#include <stdexcept>
#include <vector>

#include "besselpow/combinatorics.hpp"
#include "besselpow/rpoly.hpp"
#include "besselpow/zeta.hpp"

namespace besselpow {

/// Arguments a_1..a_n of a complete Bell polynomial; a[0] holds a_1.
using BellArgs = std::vector<RPoly>;

/// B_0..B_n from B_m = sum_{k=0}^{m-1} C(m-1,k) a_{k+1} B_{m-1-k}.
/// T needs +=, T*T, and T*Rational; `one` is the unit of T.
template <class T>
std::vector<T> complete_bell_table(const std::vector<T>& a, unsigned n, const T& one) {
  if (a.size() < n) throw std::invalid_argument("complete_bell: fewer than n arguments");
  std::vector<T> bell;
  bell.reserve(n + 1);
  bell.push_back(one);
  for (unsigned m = 1; m <= n; ++m) {
    T acc = one * Rational(0);
    for (unsigned k = 0; k < m; ++k) {
      acc += a[k] * bell[m - 1 - k] * Rational(binomial(m - 1, k));
    }
    bell.push_back(std::move(acc));
  }
  return bell;
}

template <class T>
T complete_bell(const std::vector<T>& a, unsigned n, const T& one) {
  return complete_bell_table(a, n, one).back();
}

/// a_k = (-1)^{k-1} (k-1)! zeta_nu(2k) r, k = 1..n, as polynomials in r.
BellArgs bell_args_for_bessel(unsigned n, ZetaTable& table);

}  // namespace besselpow
