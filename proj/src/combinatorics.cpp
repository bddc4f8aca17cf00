#include "besselpow/combinatorics.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace besselpow {

namespace {

std::mutex memo_mutex;

}  // namespace

Integer factorial(unsigned n) {
  static std::vector<Integer> table{Integer(1)};
  std::lock_guard<std::mutex> lock(memo_mutex);
  while (table.size() <= n) {
    Integer next = table.back() * static_cast<unsigned long>(table.size());
    table.push_back(std::move(next));
  }
  return table[n];
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return Integer(0);
  static std::map<std::pair<unsigned, unsigned>, Integer> table;
  std::lock_guard<std::mutex> lock(memo_mutex);
  auto key = std::make_pair(n, k);
  if (auto it = table.find(key); it != table.end()) return it->second;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  table.emplace(key, out);
  return out;
}

FieldValue pochhammer(const FieldValue& x, unsigned n) {
  FieldValue out = x.one();
  for (unsigned i = 0; i < n; ++i) out *= x + x.constant(i);
  return out;
}

FieldValue factorial_ratio(unsigned n, unsigned j, const FieldValue& nu) {
  if (j > n) {
    throw std::domain_error("factorial_ratio requires j <= n (got j=" + std::to_string(j) +
                            ", n=" + std::to_string(n) + ")");
  }
  // (nu+1)_n / ((nu+1)_j (nu+1)_{n-j}) = (nu+j+1)_{n-j} / (nu+1)_{n-j}
  FieldValue shifted = nu + nu.constant(j + 1);
  return pochhammer(shifted, n - j) / pochhammer(nu + nu.one(), n - j);
}

FieldValue cholewinski_b2n(unsigned n, const FieldValue& nu) {
  Rational scale = Rational(factorial(n)) * pow(Rational(4), n);
  return pochhammer(nu + nu.one(), n) * scale;
}

FieldValue cholewinski_binom(unsigned n, unsigned k, const FieldValue& nu) {
  if (k > n) {
    throw std::domain_error("cholewinski_binom requires k <= n (got k=" + std::to_string(k) +
                            ", n=" + std::to_string(n) + ")");
  }
  return factorial_ratio(n, k, nu) * Rational(binomial(n, k));
}

FieldValue generalized_binom(unsigned n, unsigned j, const std::vector<FieldValue>& a) {
  if (j > n) throw std::domain_error("generalized_binom requires j <= n");
  if (a.size() <= n) throw std::invalid_argument("generalized_binom needs a_0..a_n");
  for (unsigned k = 0; k <= n; ++k) {
    if (a[k].is_zero()) {
      throw std::domain_error("generalized_binom: a_" + std::to_string(k) + " is zero");
    }
  }
  return a[n] / (a[j] * a[n - j]) * Rational(binomial(n, j));
}

}  // namespace besselpow
