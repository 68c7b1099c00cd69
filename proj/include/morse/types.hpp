#ifndef MORSE_TYPES_HPP
#define MORSE_TYPES_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace morse {

using Complex = std::complex<double>;

/// Thrown when an iterative numerical procedure (quadrature refinement,
/// eigensolver) fails to reach its requested accuracy.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/**
 * Parameters of the generalized Morse potential
 *
 *   V(x) = v1 * exp(-2*alpha*x) - v2 * exp(-alpha*x)
 *
 * over complex strengths v1, v2 and complex width alpha, together with the
 * particle mass and hbar. Instances are immutable value objects; all
 * invariants are enforced at construction.
 */
struct MorseParams {
  Complex v1;
  Complex v2;
  Complex alpha;
  double mass;
  double hbar;

  MorseParams(Complex v1_, Complex v2_, Complex alpha_, double mass_ = 1.0,
              double hbar_ = 1.0)
      : v1(v1_), v2(v2_), alpha(alpha_), mass(mass_), hbar(hbar_) {
    if (!(mass > 0.0) || !std::isfinite(mass))
      throw std::invalid_argument("MorseParams: mass must be positive");
    if (!(hbar > 0.0) || !std::isfinite(hbar))
      throw std::invalid_argument("MorseParams: hbar must be positive");
    if (alpha == Complex(0.0, 0.0))
      throw std::invalid_argument("MorseParams: alpha must be nonzero");
    if (v1 == Complex(0.0, 0.0))
      throw std::invalid_argument(
          "MorseParams: v1 = 0 degenerates the oscillator map");
    for (Complex c : {v1, v2, alpha}) {
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw std::invalid_argument("MorseParams: parameters must be finite");
    }
  }

  /// True when v1, v2 and alpha all have zero imaginary part.
  bool real_parameters() const {
    return v1.imag() == 0.0 && v2.imag() == 0.0 && alpha.imag() == 0.0;
  }

  /// True when alpha is real (the coordinate map x -> u^2+v^2 stays real).
  bool real_alpha() const { return alpha.imag() == 0.0; }
};

/// Uniform grid on [x_min, x_max] with n_points nodes inclusive.
struct XGrid {
  double x_min;
  double x_max;
  int n_points;

  double spacing() const { return (x_max - x_min) / (n_points - 1); }
  double node(int i) const { return x_min + i * spacing(); }
};

} // namespace morse

#endif // MORSE_TYPES_HPP
