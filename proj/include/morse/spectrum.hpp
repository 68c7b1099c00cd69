#ifndef MORSE_SPECTRUM_HPP
#define MORSE_SPECTRUM_HPP

#include <vector>

#include "morse/types.hpp"

namespace morse {

/**
 * One closed-form level of the generalized Morse spectrum.
 *
 * The quantization runs through the exponent s_n = lambda - n - 1/2:
 *   E_n = -(alpha^2 hbar^2 / 2m) s_n^2,
 * and a level is a bound state exactly when Re(s_n) > 0.
 */
struct EnergyLevel {
  int n;
  Complex energy;
  Complex s_exponent;
  bool is_real;
};

/// Quantization parameter lambda = (v2/(hbar alpha)) sqrt(m/(2 v1)),
/// principal square-root branch.
inline Complex lambda_param(const MorseParams& p) {
  return (p.v2 / (p.hbar * p.alpha)) * std::sqrt(p.mass / (2.0 * p.v1));
}

/**
 * Closed-form level n (any n >= 0; analytic continuation is emitted even
 * when the level is not bound — callers filter by Re(s_n) > 0).
 * `reality_tol` sets the is_real flag: |Im E| <= tol * max(1, |Re E|).
 */
inline EnergyLevel energy_level(const MorseParams& p, int n,
                                double reality_tol = 1e-10) {
  if (n < 0) throw std::invalid_argument("energy_level: n must be >= 0");
  if (!(reality_tol > 0.0))
    throw std::invalid_argument("energy_level: reality_tol must be positive");
  const Complex s = lambda_param(p) - double(n) - 0.5;
  const Complex e =
      -(p.alpha * p.alpha * p.hbar * p.hbar / (2.0 * p.mass)) * s * s;
  const bool is_real =
      std::abs(e.imag()) <= reality_tol * std::max(1.0, std::abs(e.real()));
  return EnergyLevel{n, e, s, is_real};
}

/// All bound levels (Re(s_n) > 0) in ascending n. Empty when Re(lambda) <= 1/2.
inline std::vector<EnergyLevel> bound_levels(const MorseParams& p,
                                             double reality_tol = 1e-10) {
  if (!(reality_tol > 0.0))
    throw std::invalid_argument("bound_levels: reality_tol must be positive");
  std::vector<EnergyLevel> levels;
  const double re_lambda = lambda_param(p).real();
  for (int n = 0; re_lambda - n - 0.5 > 0.0; ++n)
    levels.push_back(energy_level(p, n, reality_tol));
  return levels;
}

} // namespace morse

#endif // MORSE_SPECTRUM_HPP
