#ifndef MORSE_DURU_MAP_HPP
#define MORSE_DURU_MAP_HPP

#include <cmath>
#include <span>
#include <vector>

#include "morse/potential.hpp"
#include "morse/quadrature.hpp"
#include "morse/types.hpp"

namespace morse {

/**
 * The two-oscillator picture of the Morse problem in parabolic coordinates
 * (u, v) with u^2 + v^2 = e^{-alpha x} and parametric time ds = (alpha^2
 * rho^2 / 4) dt. Multiplying (H - E) by 4/(alpha^2 rho^2) turns the Morse
 * Hamiltonian into a radial two-dimensional oscillator:
 *
 *   omega       = sqrt(8 v1 / (m alpha^2))      oscillator frequency
 *   pseudo      = 4 v2 / alpha^2                its energy on shell
 *   centrifugal = 2 sqrt(-2 m E) / (alpha hbar) angular-momentum index
 *
 * All square roots are principal-branch.
 */
struct OscillatorChart {
  Complex omega;
  Complex pseudo_energy;
  Complex centrifugal;
  Complex time_factor_scale; // 4 / alpha^2
  Complex ref_energy;        // the E the centrifugal index refers to
  Complex alpha;
  double mass;
  double hbar;

  bool real_frequency() const {
    return omega.imag() == 0.0 && omega.real() > 0.0;
  }
};

inline OscillatorChart build_chart(const MorseParams& p, Complex energy) {
  OscillatorChart c{};
  c.omega = std::sqrt(8.0 * p.v1 / (p.mass * p.alpha * p.alpha));
  c.pseudo_energy = 4.0 * p.v2 / (p.alpha * p.alpha);
  c.centrifugal =
      2.0 * std::sqrt(-2.0 * p.mass * energy) / (p.alpha * p.hbar);
  c.time_factor_scale = 4.0 / (p.alpha * p.alpha);
  c.ref_energy = energy;
  c.alpha = p.alpha;
  c.mass = p.mass;
  c.hbar = p.hbar;
  return c;
}

/// A point carrying both charts: Morse side (x, px) and oscillator side
/// (u, v, pu, pv), with parametric time s and physical time t.
struct PhasePoint {
  double x = 0.0;
  double px = 0.0;
  double u = 0.0;
  double v = 0.0;
  double pu = 0.0;
  double pv = 0.0;
  double s = 0.0;
  double t = 0.0;
};

enum class MapDirection { ToOscillator, ToMorse };

namespace detail {
inline void require_real_alpha(const MorseParams& p, const char* who) {
  if (p.alpha.imag() != 0.0 || p.alpha.real() == 0.0)
    throw std::invalid_argument(std::string(who) +
                                ": requires real nonzero alpha");
}
} // namespace detail

/**
 * Coordinate map between the charts. ToMorse reads the oscillator side:
 *   x = -(1/alpha) ln(u^2 + v^2),  px = -(alpha/2)(u pu + v pv),
 * the canonical radial rule p_rho = -(2/(alpha rho)) px. ToOscillator embeds
 * the Morse point in the zero-angle gauge (v = 0, pv = 0); dynamical
 * embeddings add the angular momentum separately (see embed_phase_point).
 * Round trips are the identity on the radial sector.
 */
inline PhasePoint map_coords(const MorseParams& p, PhasePoint point,
                             MapDirection direction) {
  detail::require_real_alpha(p, "map_coords");
  const double alpha = p.alpha.real();
  if (direction == MapDirection::ToMorse) {
    const double rho_sq = point.u * point.u + point.v * point.v;
    if (rho_sq <= 0.0)
      throw std::domain_error("map_coords: singular point u = v = 0");
    point.x = -std::log(rho_sq) / alpha;
    point.px = -0.5 * alpha * (point.u * point.pu + point.v * point.pv);
  } else {
    const double rho = std::exp(-0.5 * alpha * point.x);
    point.u = rho;
    point.v = 0.0;
    point.pu = -2.0 * point.px / (alpha * rho);
    point.pv = 0.0;
  }
  return point;
}

/**
 * Physical time along a trajectory sampled in parametric time:
 *   t(s) = integral_0^s (4/alpha^2) / rho^2(s') ds'
 * by cumulative composite Simpson quadrature. Requires a strictly
 * increasing s grid and rho^2 > 0 everywhere.
 */
inline std::vector<double> physical_time(std::span<const double> s,
                                         std::span<const double> rho_sq,
                                         const MorseParams& p) {
  detail::require_real_alpha(p, "physical_time");
  if (s.size() != rho_sq.size())
    throw std::invalid_argument("physical_time: size mismatch");
  const double alpha = p.alpha.real();
  const double scale = 4.0 / (alpha * alpha);
  std::vector<double> f(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!(rho_sq[i] > 0.0))
      throw std::invalid_argument("physical_time: rho^2 must be positive");
    f[i] = scale / rho_sq[i];
  }
  return cumulative_simpson(s, f);
}

// --- oscillator-side dynamics ----------------------------------------------

struct OscillatorState {
  double u = 0.0;
  double v = 0.0;
  double pu = 0.0;
  double pv = 0.0;
};

inline double oscillator_energy(const OscillatorState& st, double omega,
                                double mass) {
  return (st.pu * st.pu + st.pv * st.pv) / (2.0 * mass) +
         0.5 * mass * omega * omega * (st.u * st.u + st.v * st.v);
}

inline double oscillator_angular_momentum(const OscillatorState& st) {
  return st.u * st.pv - st.v * st.pu;
}

/// Exact evolution of the isotropic oscillator by parametric time ds.
inline OscillatorState evolve_oscillator_exact(const OscillatorState& st,
                                               double omega, double mass,
                                               double ds) {
  const double c = std::cos(omega * ds), sn = std::sin(omega * ds);
  OscillatorState out;
  out.u = st.u * c + st.pu / (mass * omega) * sn;
  out.pu = st.pu * c - mass * omega * st.u * sn;
  out.v = st.v * c + st.pv / (mass * omega) * sn;
  out.pv = st.pv * c - mass * omega * st.v * sn;
  return out;
}

/// One fixed step of 4th-order symplectic (Yoshida) composition, for the
/// invariant-drift tests where structure preservation matters more than
/// raw accuracy.
inline OscillatorState step_yoshida4(const OscillatorState& st, double omega,
                                     double mass, double ds) {
  constexpr double cbrt2 = 1.2599210498948731647672106072782; // 2^(1/3)
  const double w1 = 1.0 / (2.0 - cbrt2);
  const double w0 = -cbrt2 * w1;
  auto leapfrog = [omega, mass](OscillatorState y, double h) {
    const double k = mass * omega * omega;
    y.pu -= 0.5 * h * k * y.u;
    y.pv -= 0.5 * h * k * y.v;
    y.u += h * y.pu / mass;
    y.v += h * y.pv / mass;
    y.pu -= 0.5 * h * k * y.u;
    y.pv -= 0.5 * h * k * y.v;
    return y;
  };
  OscillatorState y = leapfrog(st, w1 * ds);
  y = leapfrog(y, w0 * ds);
  y = leapfrog(y, w1 * ds);
  return y;
}

namespace detail {
inline double potential_minimum(const MorseParams& p) {
  // real v1 > 0, v2 > 0: V_min = -v2^2/(4 v1) at e^{-alpha x} = v2/(2 v1)
  return -p.v2.real() * p.v2.real() / (4.0 * p.v1.real());
}

inline void require_bound_orbit(const MorseParams& p, double energy,
                                const char* who) {
  if (!p.real_parameters())
    throw std::invalid_argument(std::string(who) +
                                ": requires Hermitian (all-real) parameters");
  require_real_alpha(p, who);
  if (!(p.v1.real() > 0.0) || !(p.v2.real() > 0.0))
    throw std::invalid_argument(
        std::string(who) + ": bound orbits need v1 > 0 and v2 > 0");
  const double vmin = potential_minimum(p);
  if (!(energy >= vmin) || !(energy < 0.0))
    throw std::invalid_argument(std::string(who) +
                                ": energy outside the bound regime [V_min, 0)");
}
} // namespace detail

/**
 * Lift a Morse phase point with energy E onto the oscillator side. The
 * radial sector comes from map_coords; the angular momentum carried by the
 * E-dependent centrifugal term, L = 2 sqrt(-2 m E)/alpha, goes into pv
 * (zero-angle gauge, the orbit starts on the u axis).
 */
inline OscillatorState embed_phase_point(const MorseParams& p, double energy,
                                         double x, double px) {
  detail::require_bound_orbit(p, energy, "embed_phase_point");
  const double alpha = p.alpha.real();
  const double rho = std::exp(-0.5 * alpha * x);
  const double angular = 2.0 * std::sqrt(-2.0 * p.mass * energy) / alpha;
  OscillatorState st;
  st.u = rho;
  st.v = 0.0;
  st.pu = -2.0 * px / (alpha * rho);
  st.pv = angular / rho;
  return st;
}

struct TrajectorySample {
  double s = 0.0;
  double t = 0.0;
  double x = 0.0;
  double px = 0.0;
  double u = 0.0;
  double v = 0.0;
  double pu = 0.0;
  double pv = 0.0;
};

/**
 * Evolve the mapped two-oscillator system exactly over s in [0, s_span]
 * and project every sample back to the Morse chart, with physical time
 * from the parametric-time quadrature.
 */
inline std::vector<TrajectorySample> map_trajectory(const MorseParams& p,
                                                    double energy,
                                                    const PhasePoint& initial,
                                                    double s_span,
                                                    int n_samples) {
  detail::require_bound_orbit(p, energy, "map_trajectory");
  if (n_samples < 9)
    throw std::invalid_argument("map_trajectory: need at least 9 samples");
  if (!(s_span > 0.0))
    throw std::invalid_argument("map_trajectory: s_span must be positive");
  const double h_check = initial.px * initial.px / (2.0 * p.mass) +
                         eval_potential(p, initial.x).real();
  if (std::abs(h_check - energy) > 1e-9 * std::max(1.0, std::abs(energy)))
    throw std::invalid_argument(
        "map_trajectory: initial point is not on the energy shell");

  const double alpha = p.alpha.real();
  const double omega =
      std::sqrt(8.0 * p.v1.real() / (p.mass * alpha * alpha));
  const OscillatorState st0 =
      embed_phase_point(p, energy, initial.x, initial.px);

  std::vector<TrajectorySample> out(n_samples);
  std::vector<double> s_grid(n_samples), rho_sq(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    const double s = s_span * i / (n_samples - 1);
    const OscillatorState st = evolve_oscillator_exact(st0, omega, p.mass, s);
    const double r2 = st.u * st.u + st.v * st.v;
    out[i] = TrajectorySample{s,
                              0.0,
                              -std::log(r2) / alpha,
                              -0.5 * alpha * (st.u * st.pu + st.v * st.pv),
                              st.u,
                              st.v,
                              st.pu,
                              st.pv};
    s_grid[i] = s;
    rho_sq[i] = r2;
  }
  const std::vector<double> t = physical_time(s_grid, rho_sq, p);
  for (int i = 0; i < n_samples; ++i) out[i].t = t[i];
  return out;
}

/**
 * Dynamic verification of the canonical map: evolve the oscillators, map
 * every sample to (x, px, t), and measure the worst violation of the Morse
 * Hamilton equations dx/dt = px/m and dpx/dt = -dV/dx along the mapped
 * trajectory (time derivatives by centered differences on the nonuniform
 * t samples). Exact map, exact evolution: the residual is pure
 * discretization noise.
 */
inline double verify_trajectory(const MorseParams& p, double energy,
                                const PhasePoint& initial, double s_span,
                                int n_samples = 40001) {
  const auto traj = map_trajectory(p, energy, initial, s_span, n_samples);
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < traj.size(); ++i) {
    const double h1 = traj[i].t - traj[i - 1].t;
    const double h2 = traj[i + 1].t - traj[i].t;
    auto d_dt = [&](auto field) {
      const double ym = traj[i - 1].*field, y0 = traj[i].*field,
                   yp = traj[i + 1].*field;
      return -h2 / (h1 * (h1 + h2)) * ym + (h2 - h1) / (h1 * h2) * y0 +
             h1 / (h2 * (h1 + h2)) * yp;
    };
    const double r1 = d_dt(&TrajectorySample::x) - traj[i].px / p.mass;
    const double r2 = d_dt(&TrajectorySample::px) +
                      eval_potential_derivative(p, traj[i].x).real();
    worst = std::max({worst, std::abs(r1), std::abs(r2)});
  }
  return worst;
}

} // namespace morse

#endif // MORSE_DURU_MAP_HPP
