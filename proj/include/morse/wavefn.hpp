#ifndef MORSE_WAVEFN_HPP
#define MORSE_WAVEFN_HPP

#include <cmath>
#include <limits>
#include <vector>

#include "morse/laguerre.hpp"
#include "morse/potential.hpp"
#include "morse/quadrature.hpp"
#include "morse/spectrum.hpp"
#include "morse/types.hpp"

namespace morse {

/**
 * Analytic bound-state wave function in the Laguerre form
 *
 *   psi_n(x) = norm * z^{s_n} e^{-z/2} L_n^{(2 s_n)}(z),
 *   z(x)     = z0 e^{-alpha x},   z0 = 2 sqrt(2 m v1) / (alpha hbar).
 *
 * The complex power is taken on the branch z^{s} = exp(s (log z0 - alpha x))
 * with the principal log of z0: this is the analytic continuation along the
 * trajectory of z(x), which stays smooth when z winds around the origin
 * (imaginary alpha). norm = 1 until normalize_numeric sets it.
 */
struct WaveSpec {
  int n = 0;
  Complex z0;
  Complex s_exponent;
  Complex norm = 1.0;
  bool normalizable = true;
};

inline WaveSpec make_wave_spec(const MorseParams& p, const EnergyLevel& level) {
  WaveSpec spec;
  spec.n = level.n;
  spec.z0 = 2.0 * std::sqrt(2.0 * p.mass * p.v1) / (p.alpha * p.hbar);
  spec.s_exponent = level.s_exponent;
  return spec;
}

/**
 * Evaluate psi at a real position. When Re(z) > 700 the amplitude is below
 * double range; 0 is returned and *underflow (when given) is set.
 */
inline Complex eval_psi(const MorseParams& p, const WaveSpec& spec, double x,
                        bool* underflow = nullptr) {
  if (underflow) *underflow = false;
  const Complex w = std::log(spec.z0) - p.alpha * x;
  if (w.real() > 690.0 && std::cos(w.imag()) > 0.0) {
    // Re z = e^{Re w} cos(Im w) certainly exceeds 700; exp(w) may overflow
    if (underflow) *underflow = true;
    return Complex(0.0, 0.0);
  }
  const Complex z = std::exp(w);
  if (z.real() > 700.0) {
    if (underflow) *underflow = true;
    return Complex(0.0, 0.0);
  }
  return spec.norm * std::exp(spec.s_exponent * w - 0.5 * z) *
         laguerre_assoc(spec.n, 2.0 * spec.s_exponent, z);
}

inline Complex eval_psi(const MorseParams& p, const EnergyLevel& level,
                        double x, bool* underflow = nullptr) {
  return eval_psi(p, make_wave_spec(p, level), x, underflow);
}

/// d psi/dx on the same branch, via d/dz L_n^{(a)} = -L_{n-1}^{(a+1)}.
inline Complex eval_psi_derivative(const MorseParams& p, const WaveSpec& spec,
                                   double x) {
  const Complex w = std::log(spec.z0) - p.alpha * x;
  if (w.real() > 690.0 && std::cos(w.imag()) > 0.0) return Complex(0.0, 0.0);
  const Complex z = std::exp(w);
  if (z.real() > 700.0) return Complex(0.0, 0.0);
  const Complex s = spec.s_exponent;
  const Complex envelope = spec.norm * std::exp(s * w - 0.5 * z);
  const Complex lag = laguerre_assoc(spec.n, 2.0 * s, z);
  const Complex lag_deriv =
      spec.n == 0 ? Complex(0.0, 0.0)
                  : -laguerre_assoc(spec.n - 1, 2.0 * s + 1.0, z);
  return -p.alpha * envelope * ((s - 0.5 * z) * lag + z * lag_deriv);
}

struct QuadratureConfig {
  double rel_tol = 1e-11;
  double abs_tol = 1e-14;
  double tail_cutoff = 1e-16; // window edge: integrand below cutoff * peak
  int max_expansions = 400;
};

namespace detail {

inline bool psi_decays(const MorseParams& p, const WaveSpec& spec) {
  return p.alpha.imag() == 0.0 && p.alpha.real() != 0.0 &&
         spec.s_exponent.real() > 0.0 && spec.z0.real() > 0.0;
}

// Window [x_lo, x_hi] such that |psi|^2 at both edges is below
// cutoff * peak. Found by coarse scan plus outward expansion.
template <typename F>
inline std::pair<double, double> integration_window(F&& f2, double x_guess_lo,
                                                    double x_guess_hi,
                                                    const QuadratureConfig& cfg,
                                                    const char* who) {
  double lo = x_guess_lo, hi = x_guess_hi;
  double peak = 0.0;
  const int scan = 2001;
  for (int i = 0; i < scan; ++i)
    peak = std::max(peak, f2(lo + (hi - lo) * i / (scan - 1)));
  if (peak <= 0.0)
    throw NumericalError(std::string(who) +
                         ": integrand vanished over the scan window");
  const double edge = cfg.tail_cutoff * peak;
  int budget = cfg.max_expansions;
  while (f2(lo) > edge && budget-- > 0) lo -= 0.25 * (hi - lo);
  while (f2(hi) > edge && budget-- > 0) hi += 0.25 * (hi - lo);
  if (budget <= 0)
    throw NumericalError(std::string(who) +
                         ": window expansion did not reach the tail cutoff");
  return {lo, hi};
}

} // namespace detail

/**
 * Numerical normalization so that the modulus-square integral over the real
 * line is 1. Non-decaying states (imaginary alpha, Re(s) <= 0) are returned
 * unchanged with normalizable = false; the PT-type normalization question is
 * deliberately left open and the residual test below does not depend on it.
 */
inline WaveSpec normalize_numeric(const MorseParams& p, const WaveSpec& spec0,
                                  const QuadratureConfig& cfg = {}) {
  WaveSpec spec = spec0;
  if (!detail::psi_decays(p, spec)) {
    spec.norm = 1.0;
    spec.normalizable = false;
    return spec;
  }
  auto f2 = [&](double x) { return std::norm(eval_psi(p, spec, x)); };
  // initial bracket in z: e^{-z} dominates past z ~ few * (s + n), the
  // z^{2s} tail dominates below z ~ 1
  const double alpha = p.alpha.real();
  const double re_s = spec.s_exponent.real();
  const double z_hi = 8.0 * (re_s + spec.n) + 60.0;
  const double z_lo = 0.05;
  double xa = (std::log(std::abs(spec.z0)) - std::log(z_hi)) / alpha;
  double xb = (std::log(std::abs(spec.z0)) - std::log(z_lo)) / alpha;
  if (xa > xb) std::swap(xa, xb);
  const auto [lo, hi] =
      detail::integration_window(f2, xa, xb, cfg, "normalize_numeric");
  const double integral =
      integrate_adaptive(f2, lo, hi, cfg.rel_tol, cfg.abs_tol);
  spec.norm = spec0.norm / std::sqrt(integral);
  spec.normalizable = true;
  return spec;
}

inline WaveSpec normalize_numeric(const MorseParams& p,
                                  const EnergyLevel& level,
                                  const QuadratureConfig& cfg = {}) {
  return normalize_numeric(p, make_wave_spec(p, level), cfg);
}

/**
 * Pointwise Schrodinger residual
 *
 *   max_i | -(hbar^2/2m) psi''(x_i) + (V(x_i) - E) psi(x_i) | / max |psi|
 *
 * with psi'' from the 5-point central stencil over a uniform grid. Valid
 * for complex E, complex V and non-normalizable PT states; this is the
 * universal verifier for the analytically continued spectrum. Returns
 * +infinity when psi vanishes identically on the grid.
 */
inline double ode_residual(const MorseParams& p, const EnergyLevel& level,
                           const XGrid& grid) {
  if (grid.n_points < 9)
    throw std::invalid_argument("ode_residual: need at least 9 grid points");
  if (!(grid.x_max > grid.x_min))
    throw std::invalid_argument("ode_residual: x_max must exceed x_min");
  const WaveSpec spec = make_wave_spec(p, level);
  const int n = grid.n_points;
  const double h = grid.spacing();
  std::vector<Complex> psi(n);
  double peak = 0.0;
  for (int i = 0; i < n; ++i) {
    psi[i] = eval_psi(p, spec, grid.node(i));
    peak = std::max(peak, std::abs(psi[i]));
  }
  if (peak == 0.0) return std::numeric_limits<double>::infinity();

  const double kinetic = p.hbar * p.hbar / (2.0 * p.mass);
  double worst = 0.0;
  for (int i = 2; i + 2 < n; ++i) {
    const Complex d2 = (-psi[i - 2] + 16.0 * psi[i - 1] - 30.0 * psi[i] +
                        16.0 * psi[i + 1] - psi[i + 2]) /
                       (12.0 * h * h);
    const Complex r =
        -kinetic * d2 + (eval_potential(p, grid.node(i)) - level.energy) * psi[i];
    worst = std::max(worst, std::abs(r));
  }
  return worst / peak;
}

} // namespace morse

#endif // MORSE_WAVEFN_HPP
