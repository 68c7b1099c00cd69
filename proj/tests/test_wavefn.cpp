#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "morse/potential.hpp"
#include "morse/quadrature.hpp"
#include "morse/spectrum.hpp"
#include "morse/wavefn.hpp"

using morse::Complex;
using morse::MorseParams;
using morse::XGrid;

namespace {
const MorseParams kBenchmark = morse::preset_hermitian(1, 2, 1, 0.5, 1.0);
const MorseParams kDeepWell = morse::preset_hermitian(1, 6, 1, 0.5, 1.0);
const MorseParams kPt = morse::preset_pt_imaginary_alpha(1, 2, 1, 0.5, 1.0);

int count_sign_changes(const MorseParams& p, const morse::EnergyLevel& level,
                       const XGrid& grid) {
  const morse::WaveSpec spec = morse::make_wave_spec(p, level);
  double scale = 0.0;
  std::vector<double> values(grid.n_points);
  for (int i = 0; i < grid.n_points; ++i) {
    values[i] = morse::eval_psi(p, spec, grid.node(i)).real();
    scale = std::max(scale, std::abs(values[i]));
  }
  int changes = 0;
  double prev = 0.0;
  for (double v : values) {
    if (std::abs(v) < 1e-9 * scale) continue; // skip the numerical tail
    if (prev != 0.0 && std::signbit(v) != std::signbit(prev)) ++changes;
    prev = v;
  }
  return changes;
}
} // namespace

TEST_CASE("ground state has a single hump and no interior zeros") {
  const auto e0 = morse::energy_level(kBenchmark, 0);
  REQUIRE(count_sign_changes(kBenchmark, e0, XGrid{-5.0, 25.0, 2000}) == 0);
}

TEST_CASE("node count equals the level index") {
  for (int n = 0; n < 3; ++n) {
    const auto level = morse::energy_level(kDeepWell, n);
    REQUIRE(count_sign_changes(kDeepWell, level, XGrid{-5.0, 25.0, 2000}) == n);
  }
}

TEST_CASE("the wave function underflows gracefully deep in the barrier") {
  const auto e0 = morse::energy_level(kBenchmark, 0);
  bool underflow = false;
  // z = 2 e^8 > 700
  const Complex value = morse::eval_psi(kBenchmark, e0, -8.0, &underflow);
  REQUIRE(underflow);
  REQUIRE(value == Complex(0.0, 0.0));
  // and is perfectly finite nearby
  REQUIRE(std::abs(morse::eval_psi(kBenchmark, e0, -5.0, &underflow)) > 0.0);
  REQUIRE_FALSE(underflow);
}

TEST_CASE("numerical normalization") {
  const auto e0 = morse::energy_level(kBenchmark, 0);
  const morse::WaveSpec spec = morse::normalize_numeric(kBenchmark, e0);
  REQUIRE(spec.normalizable);
  // for this well the raw norm integral is Gamma(2 s_0) / alpha = 1
  REQUIRE(std::abs(spec.norm - Complex(1.0, 0.0)) < 1e-8);

  SECTION("the defining property, checked with an independent rule") {
    // composite Simpson over a wide window
    const int n = 20001;
    std::vector<double> s(n), f(n);
    for (int i = 0; i < n; ++i) {
      s[i] = -6.0 + 46.0 * i / (n - 1);
      f[i] = std::norm(morse::eval_psi(kBenchmark, spec, s[i]));
    }
    const double integral = morse::cumulative_simpson(s, f).back();
    REQUIRE(std::abs(integral - 1.0) < 1e-8);
  }

  SECTION("normalizing an already normalized spec is idempotent") {
    const morse::WaveSpec again = morse::normalize_numeric(kBenchmark, spec);
    REQUIRE(std::abs(again.norm - spec.norm) < 1e-14);
  }

  SECTION("doubling the quadrature window does not move the norm") {
    morse::QuadratureConfig wide;
    wide.tail_cutoff = 1e-32; // pushes both edges far outward
    const morse::WaveSpec spec_wide =
        morse::normalize_numeric(kBenchmark, e0, wide);
    REQUIRE(std::abs(spec_wide.norm - spec.norm) < 1e-10);
  }
}

TEST_CASE("distinct Hermitian eigenfunctions are orthogonal") {
  const auto psi0 = morse::normalize_numeric(kDeepWell, morse::energy_level(kDeepWell, 0));
  const auto psi1 = morse::normalize_numeric(kDeepWell, morse::energy_level(kDeepWell, 1));
  const double overlap = morse::integrate_adaptive(
      [&](double x) {
        return (morse::eval_psi(kDeepWell, psi0, x) *
                morse::eval_psi(kDeepWell, psi1, x))
            .real();
      },
      -6.0, 40.0, 1e-12, 1e-12);
  REQUIRE(std::abs(overlap) < 1e-7);
}

TEST_CASE("energy equals the Rayleigh quotient of the analytic state") {
  const auto level = morse::energy_level(kDeepWell, 0); // E = -6.25
  const auto spec = morse::normalize_numeric(kDeepWell, level);
  const double kinetic_scale =
      kDeepWell.hbar * kDeepWell.hbar / (2.0 * kDeepWell.mass);
  const double numerator = morse::integrate_adaptive(
      [&](double x) {
        const double dpsi =
            morse::eval_psi_derivative(kDeepWell, spec, x).real();
        const double psi = morse::eval_psi(kDeepWell, spec, x).real();
        return kinetic_scale * dpsi * dpsi +
               morse::eval_potential(kDeepWell, x).real() * psi * psi;
      },
      -6.0, 40.0, 1e-11, 1e-11);
  const double denominator = morse::integrate_adaptive(
      [&](double x) {
        return std::norm(morse::eval_psi(kDeepWell, spec, x));
      },
      -6.0, 40.0, 1e-12, 1e-12);
  const double rayleigh = numerator / denominator;
  REQUIRE(std::abs(rayleigh - level.energy.real()) <
          1e-6 * std::abs(level.energy.real()));
}

TEST_CASE("PT states are flagged not normalizable and left unscaled") {
  const auto spec = morse::normalize_numeric(kPt, morse::energy_level(kPt, 0));
  REQUIRE_FALSE(spec.normalizable);
  REQUIRE(spec.norm == Complex(1.0, 0.0));
}

TEST_CASE("Schrodinger residual of the analytic solutions") {
  SECTION("Hermitian benchmark") {
    const auto e0 = morse::energy_level(kBenchmark, 0);
    REQUIRE(morse::ode_residual(kBenchmark, e0, XGrid{-5.0, 25.0, 6000}) <
            1e-6);
  }
  SECTION("imaginary width, complex energy") {
    const auto e0 = morse::energy_level(kPt, 0);
    REQUIRE(morse::ode_residual(kPt, e0, XGrid{-10.0, 10.0, 8000}) < 1e-5);
  }
  SECTION("non-PT complex parameters") {
    const MorseParams p = morse::preset_non_pt_complex(2, 1, 2, 1, 0.5);
    for (const auto& level : morse::bound_levels(p))
      REQUIRE(morse::ode_residual(p, level, XGrid{-5.0, 25.0, 6000}) < 1e-5);
  }
}

TEST_CASE("residual shrinks ~16x per grid halving (4th-order stencil)") {
  const auto e0 = morse::energy_level(kBenchmark, 0);
  const double r1 = morse::ode_residual(kBenchmark, e0, XGrid{-5.0, 25.0, 1500});
  const double r2 = morse::ode_residual(kBenchmark, e0, XGrid{-5.0, 25.0, 3000});
  const double r3 = morse::ode_residual(kBenchmark, e0, XGrid{-5.0, 25.0, 6000});
  REQUIRE(r1 / r2 > 11.0);
  REQUIRE(r1 / r2 < 22.0);
  REQUIRE(r2 / r3 > 11.0);
  REQUIRE(r2 / r3 < 22.0);
}

TEST_CASE("residual edge cases") {
  const auto e0 = morse::energy_level(kBenchmark, 0);
  // all samples underflow to zero on a grid deep inside the barrier
  const double r = morse::ode_residual(kBenchmark, e0, XGrid{-1800.0, -1700.0, 16});
  REQUIRE(std::isinf(r));
  REQUIRE_THROWS_AS(morse::ode_residual(kBenchmark, e0, XGrid{-5.0, 25.0, 8}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(morse::ode_residual(kBenchmark, e0, XGrid{5.0, -5.0, 100}),
                    std::invalid_argument);
}
