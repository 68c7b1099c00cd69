#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "morse/oracle.hpp"
#include "morse/potential.hpp"
#include "morse/spectrum.hpp"

using morse::Complex;
using morse::GridSpec;
using morse::MorseParams;

namespace {
const MorseParams kBenchmark = morse::preset_hermitian(1, 2, 1, 0.5, 1.0);
const Complex kZero(0.0, 0.0);
auto kFreeV = [](double) { return kZero; };
} // namespace

TEST_CASE("free-particle stencil entries") {
  // interior diagonal hbar^2/(m h^2), off-diagonal -hbar^2/(2 m h^2)
  const GridSpec grid{0.0, 1.0, 101, 2};
  const auto h = morse::build_grid_hamiltonian(kFreeV, grid, 0.5, 1.0);
  const double dx = grid.spacing();
  const double c = 1.0 / (2.0 * 0.5 * dx * dx);
  REQUIRE(h.dim() == 99);
  REQUIRE(h.diag[40] == Complex(2.0 * c, 0.0));
  REQUIRE(h.off1[40] == Complex(-c, 0.0));
  REQUIRE(h.off2.empty());
}

TEST_CASE("matrix structure: symmetric always, real iff the potential is") {
  const GridSpec grid{-2.0, 8.0, 64, 4};

  const auto real_h = morse::build_grid_hamiltonian(kBenchmark, grid);
  REQUIRE(real_h.is_real());

  const auto complex_h = morse::build_grid_hamiltonian(
      morse::preset_non_pt_complex(2, 1, 2, 1, 0.5), grid);
  REQUIRE_FALSE(complex_h.is_real());

  // transpose equality holds bitwise for the dense expansion of both
  for (const auto& h : {real_h, complex_h}) {
    const auto dense = h.to_dense();
    const int m = h.dim();
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        REQUIRE(dense[i * m + j] == dense[j * m + i]);
        if (std::abs(i - j) > 2) REQUIRE(dense[i * m + j] == kZero);
      }
  }
}

TEST_CASE("oracle self-calibration: particle in a box") {
  // V = 0 on [0, 1], m = 1/2, hbar = 1: E_n = n^2 pi^2
  const GridSpec grid{0.0, 1.0, 2000, 4};
  const auto evs = morse::eig_low(kFreeV, grid, 0.5, 1.0, 3);
  const double pi_sq = std::numbers::pi * std::numbers::pi;
  REQUIRE(std::abs(evs[0].real() - pi_sq) < 1e-4 * pi_sq);
  REQUIRE(std::abs(evs[1].real() - 4.0 * pi_sq) < 1e-4 * 4.0 * pi_sq);
}

TEST_CASE("oracle self-calibration: harmonic oscillator") {
  // m = hbar = omega = 1 on [-12, 12]: E_n = n + 1/2
  const GridSpec grid{-12.0, 12.0, 3000, 4};
  const auto evs = morse::eig_low(
      [](double x) { return Complex(0.5 * x * x, 0.0); }, grid, 1.0, 1.0, 6);
  for (int n = 0; n <= 5; ++n)
    REQUIRE(std::abs(evs[n].real() - (n + 0.5)) < 1e-6);
}

TEST_CASE("shifting the potential shifts every eigenvalue exactly") {
  const GridSpec grid{-5.0, 25.0, 600, 4};
  const double shift = 3.7;
  const auto base = morse::eig_low(kBenchmark, grid, 4);
  const auto shifted = morse::eig_low(
      [&](double x) { return morse::eval_potential(kBenchmark, x) + shift; },
      grid, kBenchmark.mass, kBenchmark.hbar, 4);
  for (int i = 0; i < 4; ++i)
    REQUIRE(std::abs(shifted[i] - base[i] - shift) < 1e-9);
}

TEST_CASE("stencil-2 eigenvalue error decays at second order") {
  double prev = 0.0;
  for (int n : {1000, 2000, 4000}) {
    const auto evs = morse::eig_low(kBenchmark, GridSpec{-5.0, 25.0, n, 2}, 1);
    const double err = std::abs(evs[0].real() + 0.25);
    if (prev > 0.0) REQUIRE(prev / err > 3.5);
    prev = err;
  }
}

TEST_CASE("domain truncation is exponentially insensitive") {
  const auto e25 = morse::eig_low(kBenchmark, GridSpec{-5.0, 25.0, 4000, 4}, 1);
  const auto e35 = morse::eig_low(kBenchmark, GridSpec{-5.0, 35.0, 5334, 4}, 1);
  REQUIRE(std::abs(e25[0] - e35[0]) < 1e-9);
}

TEST_CASE("every bound level of a three-level well matches the grid") {
  const MorseParams deep = morse::preset_hermitian(1, 6, 1, 0.5, 1.0);
  const auto analytic = morse::bound_levels(deep); // -6.25, -2.25, -0.25
  const auto numeric = morse::eig_low(deep, GridSpec{-5.0, 25.0, 4000, 4}, 5);
  const auto report = morse::match_spectra(analytic, numeric, 1e-6);
  REQUIRE(report.pass);
  REQUIRE(report.matches.size() == 3);
}

TEST_CASE("complex-symmetric path finds the non-PT bound levels") {
  const MorseParams p = morse::preset_non_pt_complex(2, 1, 2, 1, 0.5);
  const auto numeric = morse::eig_low(p, GridSpec{-5.0, 25.0, 500, 4}, 4);
  const auto analytic = morse::bound_levels(p); // -4, -1
  const auto report = morse::match_spectra(analytic, numeric, 1e-4);
  REQUIRE(report.pass);
  REQUIRE(report.matches.size() == 2);
  for (const auto& m : report.matches) REQUIRE(m.delta < 1e-4);
}

TEST_CASE("greedy spectrum matching") {
  const auto mk_level = [](int n, Complex e) {
    return morse::EnergyLevel{n, e, Complex(0.0), true};
  };
  SECTION("identical inputs self-match at zero distance") {
    const std::vector<morse::EnergyLevel> analytic = {
        mk_level(0, Complex(-0.25, 0.0)), mk_level(1, Complex(-0.1, 0.0))};
    const std::vector<Complex> numeric = {Complex(-0.25, 0.0),
                                          Complex(-0.1, 0.0)};
    const auto report = morse::match_spectra(analytic, numeric, 1e-12);
    REQUIRE(report.pass);
    for (const auto& m : report.matches) REQUIRE(m.delta == 0.0);
  }
  SECTION("nearest-distance rule") {
    const std::vector<morse::EnergyLevel> analytic = {
        mk_level(0, Complex(-0.25, 0.0))};
    const std::vector<Complex> numeric = {Complex(-0.249999, 0.0),
                                          Complex(0.1, 0.0), Complex(0.3, 0.0)};
    const auto report = morse::match_spectra(analytic, numeric, 1e-4);
    REQUIRE(report.pass);
    REQUIRE(report.matches[0].numeric == Complex(-0.249999, 0.0));
  }
  SECTION("a distant eigenvalue fails the match") {
    const std::vector<morse::EnergyLevel> analytic = {
        mk_level(0, Complex(-0.25, 0.0))};
    const std::vector<Complex> numeric = {Complex(0.1, 0.0)};
    const auto report = morse::match_spectra(analytic, numeric, 1e-4);
    REQUIRE_FALSE(report.pass);
    REQUIRE(report.matches[0].delta == Catch::Approx(0.35));
  }
  SECTION("tolerance must be positive") {
    REQUIRE_THROWS_AS(morse::match_spectra({}, {}, 0.0), std::invalid_argument);
  }
}

TEST_CASE("grid and solver argument validation") {
  REQUIRE_THROWS_AS(morse::eig_low(kBenchmark, GridSpec{-5.0, 25.0, 100, 3}, 1),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(morse::eig_low(kBenchmark, GridSpec{5.0, -5.0, 100, 2}, 1),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(morse::eig_low(kBenchmark, GridSpec{-5.0, 25.0, 10, 2}, 1),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(morse::eig_low(kBenchmark, GridSpec{-5.0, 25.0, 100, 2}, 98),
                    std::invalid_argument);
}
