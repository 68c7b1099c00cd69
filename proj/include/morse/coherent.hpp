#ifndef MORSE_COHERENT_HPP
#define MORSE_COHERENT_HPP

#include <cmath>
#include <span>
#include <vector>

#include "morse/duru_map.hpp"
#include "morse/types.hpp"

namespace morse {

/**
 * Parametric-time coherent state of the two mapped oscillators, labeled by
 * the holomorphic coordinates
 *
 *   a = sqrt(m omega / 2 hbar) (q + i p / (m omega)),
 *
 * the classical analogues of the lowering operators. Evolution in s is the
 * exact phase rotation a -> a e^{-i omega s}; states are immutable values.
 */
struct CoherentState {
  Complex a_u;
  Complex a_v;
  OscillatorChart chart;
  double s = 0.0;
};

namespace detail {
inline void require_real_omega(const OscillatorChart& chart, const char* who) {
  if (!chart.real_frequency())
    throw std::domain_error(
        std::string(who) +
        ": defined for real-frequency (Hermitian) charts only");
}
} // namespace detail

/// Holomorphic coordinate of a classical phase-space point (real-omega
/// charts; complex charts take a directly).
inline Complex coherent_from_phase_space(double q, double p,
                                         const OscillatorChart& chart) {
  detail::require_real_omega(chart, "coherent_from_phase_space");
  const double mw = chart.mass * chart.omega.real();
  return std::sqrt(mw / (2.0 * chart.hbar)) * Complex(q, p / mw);
}

/// Exact evolution by parametric time ds (no integration error).
inline CoherentState evolve(const CoherentState& state, double ds) {
  const Complex phase = std::exp(Complex(0.0, -1.0) * state.chart.omega * ds);
  CoherentState out = state;
  out.a_u = state.a_u * phase;
  out.a_v = state.a_v * phase;
  out.s = state.s + ds;
  return out;
}

struct Observables {
  double mean_q;
  double mean_p;
  double sigma_q;
  double sigma_p;
};

struct StateObservables {
  Observables u;
  Observables v;
};

/**
 * Means and widths per oscillator:
 *   <q> = sqrt(2 hbar / m omega) Re a,  <p> = sqrt(2 hbar m omega) Im a,
 *   dq = sqrt(hbar / 2 m omega),        dp = sqrt(hbar m omega / 2),
 * so dq dp = hbar/2 at every s: minimum uncertainty, non-dispersing.
 */
inline StateObservables observables(const CoherentState& state) {
  detail::require_real_omega(state.chart, "observables");
  const double mw = state.chart.mass * state.chart.omega.real();
  const double hbar = state.chart.hbar;
  const double q_scale = std::sqrt(2.0 * hbar / mw);
  const double p_scale = std::sqrt(2.0 * hbar * mw);
  const double sigma_q = std::sqrt(hbar / (2.0 * mw));
  const double sigma_p = std::sqrt(0.5 * hbar * mw);
  auto obs = [&](Complex a) {
    return Observables{q_scale * a.real(), p_scale * a.imag(), sigma_q,
                       sigma_p};
  };
  return StateObservables{obs(state.a_u), obs(state.a_v)};
}

struct MeanPathSample {
  double s;
  double t;
  double x_mean;
  Complex a_u;
  Complex a_v;
};

/**
 * Mean Morse trajectory of a displaced state: the oscillator mean values
 * follow the classical orbit exactly, and the classical coordinate law
 * maps them back,
 *
 *   x_mean(s) = -(1/alpha) ln(<u>^2 + <v>^2),
 *
 * with physical time from the parametric-time quadrature over the mean
 * radius (t = 0 at the first grid point). Throws when the mean orbit
 * collapses onto the coordinate origin.
 */
inline std::vector<MeanPathSample> mean_morse_trajectory(
    const CoherentState& state0, std::span<const double> s_grid,
    const MorseParams& params) {
  detail::require_real_omega(state0.chart, "mean_morse_trajectory");
  detail::require_real_alpha(params, "mean_morse_trajectory");
  if (s_grid.size() < 2)
    throw std::invalid_argument("mean_morse_trajectory: need >= 2 s samples");
  const double alpha = params.alpha.real();
  const double q_scale =
      std::sqrt(2.0 * state0.chart.hbar /
                (state0.chart.mass * state0.chart.omega.real()));

  const std::size_t n = s_grid.size();
  std::vector<MeanPathSample> out(n);
  std::vector<double> rho_sq(n);
  double rho_sq_max = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const CoherentState st = evolve(state0, s_grid[i] - state0.s);
    const double mu = q_scale * st.a_u.real();
    const double mv = q_scale * st.a_v.real();
    rho_sq[i] = mu * mu + mv * mv;
    rho_sq_max = std::max(rho_sq_max, rho_sq[i]);
    out[i] = MeanPathSample{s_grid[i], 0.0, 0.0, st.a_u, st.a_v};
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (rho_sq[i] <= 1e-12 * rho_sq_max)
      throw std::domain_error(
          "mean_morse_trajectory: mean orbit passes through the origin at s = " +
          std::to_string(s_grid[i]));
    out[i].x_mean = -std::log(rho_sq[i]) / alpha;
  }
  const std::vector<double> t = physical_time(s_grid, rho_sq, params);
  for (std::size_t i = 0; i < n; ++i) out[i].t = t[i];
  return out;
}

} // namespace morse

#endif // MORSE_COHERENT_HPP
