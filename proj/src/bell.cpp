#include "besselpow/bell.hpp"

namespace besselpow {

BellArgs bell_args_for_bessel(unsigned n, ZetaTable& table) {
  const FieldValue zero = table.nu().zero();
  BellArgs args;
  args.reserve(n);
  for (unsigned k = 1; k <= n; ++k) {
    Rational scale(factorial(k - 1));
    if (k % 2 == 0) scale = -scale;
    args.push_back(RPoly::linear(zero, table.get(k) * scale));
  }
  return args;
}

}  // namespace besselpow
