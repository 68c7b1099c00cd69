#ifndef MORSE_LAGUERRE_HPP
#define MORSE_LAGUERRE_HPP

#include "morse/types.hpp"

namespace morse {

/**
 * Associated Laguerre polynomial L_n^{(a)}(z) for complex order parameter a
 * and complex argument z, by the stable three-term recurrence
 *
 *   k L_k = (2k - 1 + a - z) L_{k-1} - (k - 1 + a) L_{k-2}.
 */
inline Complex laguerre_assoc(int n, Complex a, Complex z) {
  if (n < 0) throw std::invalid_argument("laguerre_assoc: degree must be >= 0");
  if (n == 0) return Complex(1.0, 0.0);
  Complex lkm2(1.0, 0.0);
  Complex lkm1 = 1.0 + a - z;
  for (int k = 2; k <= n; ++k) {
    const Complex lk =
        ((double(2 * k - 1) + a - z) * lkm1 - (double(k - 1) + a) * lkm2) /
        double(k);
    lkm2 = lkm1;
    lkm1 = lk;
  }
  return lkm1;
}

} // namespace morse

#endif // MORSE_LAGUERRE_HPP
