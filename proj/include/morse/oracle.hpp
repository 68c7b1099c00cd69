#ifndef MORSE_ORACLE_HPP
#define MORSE_ORACLE_HPP

#include <algorithm>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "morse/potential.hpp"
#include "morse/spectrum.hpp"
#include "morse/types.hpp"

namespace morse {

/// Real-line truncation grid for the finite-difference Hamiltonian.
/// Dirichlet conditions at both ends; stencil_order 2 (3-point) or 4
/// (5-point).
struct GridSpec {
  double x_min;
  double x_max;
  int n_points;
  int stencil_order = 4;

  void validate() const {
    if (!(x_min < x_max))
      throw std::invalid_argument("GridSpec: x_min must be below x_max");
    if (n_points < 16)
      throw std::invalid_argument("GridSpec: need at least 16 points");
    if (stencil_order != 2 && stencil_order != 4)
      throw std::invalid_argument("GridSpec: stencil_order must be 2 or 4");
  }
  double spacing() const { return (x_max - x_min) / (n_points - 1); }
};

/**
 * H = -(hbar^2/2m) D2 + diag(V(x_i)) over the interior nodes, stored by
 * symmetric bands. The matrix is complex-symmetric for complex V and real
 * symmetric for real V. With the 5-point stencil the rows next to the walls
 * use the antisymmetric-reflection ghost point (psi(-h) = -psi(h)), which
 * only touches the diagonal and so keeps the bands symmetric.
 */
struct BandedHamiltonian {
  GridSpec grid;
  std::vector<double> x;       // interior nodes
  std::vector<Complex> diag;
  std::vector<Complex> off1;
  std::vector<Complex> off2;   // empty for the 3-point stencil

  int dim() const { return static_cast<int>(diag.size()); }
  int bandwidth() const { return off2.empty() ? 1 : 2; }

  bool is_real() const {
    auto real_band = [](const std::vector<Complex>& band) {
      for (const Complex& c : band)
        if (c.imag() != 0.0) return false;
      return true;
    };
    return real_band(diag) && real_band(off1) && real_band(off2);
  }

  /// Dense row-major copy (for the general complex eigensolver and tests).
  std::vector<Complex> to_dense() const {
    const int m = dim();
    std::vector<Complex> a(static_cast<std::size_t>(m) * m, Complex(0.0));
    for (int i = 0; i < m; ++i) {
      a[std::size_t(i) * m + i] = diag[i];
      if (i + 1 < m) {
        a[std::size_t(i) * m + i + 1] = off1[i];
        a[std::size_t(i + 1) * m + i] = off1[i];
      }
      if (!off2.empty() && i + 2 < m) {
        a[std::size_t(i) * m + i + 2] = off2[i];
        a[std::size_t(i + 2) * m + i] = off2[i];
      }
    }
    return a;
  }
};

inline BandedHamiltonian build_grid_hamiltonian(
    const std::function<Complex(double)>& potential, const GridSpec& grid,
    double mass, double hbar) {
  grid.validate();
  const int m = grid.n_points - 2;
  const double h = grid.spacing();
  BandedHamiltonian hmat;
  hmat.grid = grid;
  hmat.x.resize(m);
  hmat.diag.resize(m);
  for (int i = 0; i < m; ++i) hmat.x[i] = grid.x_min + (i + 1) * h;

  const double c = hbar * hbar / (2.0 * mass * h * h);
  if (grid.stencil_order == 2) {
    hmat.off1.assign(m - 1, Complex(-c));
    for (int i = 0; i < m; ++i)
      hmat.diag[i] = 2.0 * c + potential(hmat.x[i]);
  } else {
    const double c12 = c / 12.0;
    hmat.off1.assign(m - 1, Complex(-16.0 * c12));
    hmat.off2.assign(m - 2, Complex(c12));
    for (int i = 0; i < m; ++i)
      hmat.diag[i] = 30.0 * c12 + potential(hmat.x[i]);
    hmat.diag[0] = 29.0 * c12 + potential(hmat.x[0]);
    hmat.diag[m - 1] = 29.0 * c12 + potential(hmat.x[m - 1]);
  }
  return hmat;
}

inline BandedHamiltonian build_grid_hamiltonian(const MorseParams& p,
                                                const GridSpec& grid) {
  return build_grid_hamiltonian(
      [&p](double x) { return eval_potential(p, x); }, grid, p.mass, p.hbar);
}

namespace detail {

// k smallest eigenvalues of the real symmetric banded matrix (LAPACK dsbevx,
// bisection on the index range).
inline std::vector<Complex> eig_low_real_banded(const BandedHamiltonian& h,
                                                int k) {
  const int m = h.dim();
  const int kd = h.bandwidth();
  const int ldab = kd + 1;
  // column-major upper band storage: ab[kd + i - j + j*ldab] = H(i,j)
  std::vector<double> ab(static_cast<std::size_t>(ldab) * m, 0.0);
  for (int j = 0; j < m; ++j) {
    ab[kd + std::size_t(j) * ldab] = h.diag[j].real();
    if (j >= 1) ab[kd - 1 + std::size_t(j) * ldab] = h.off1[j - 1].real();
    if (kd == 2 && j >= 2)
      ab[kd - 2 + std::size_t(j) * ldab] = h.off2[j - 2].real();
  }
  std::vector<double> w(m, 0.0);
  std::vector<double> q(1, 0.0), z(1, 0.0);
  std::vector<lapack_int> ifail(m, 0);
  lapack_int found = 0;
  const double abstol = 2.0 * LAPACKE_dlamch('S');
  const lapack_int info = LAPACKE_dsbevx(
      LAPACK_COL_MAJOR, 'N', 'I', 'U', m, kd, ab.data(), ldab, q.data(), 1,
      0.0, 0.0, 1, k, abstol, &found, w.data(), z.data(), 1, ifail.data());
  if (info != 0 || found < k)
    throw NumericalError("eig_low: dsbevx failed (info " +
                         std::to_string(info) + ", dim " + std::to_string(m) +
                         ", bandwidth " + std::to_string(kd) + ", " +
                         std::to_string(found) + "/" + std::to_string(k) +
                         " eigenvalues converged)");
  std::vector<Complex> out(k);
  for (int i = 0; i < k; ++i) out[i] = Complex(w[i], 0.0);
  return out;
}

// k lowest-real-part eigenvalues of the complex-symmetric matrix via the
// dense general solver (LAPACK zgeev). O(m^3): meant for moderate grids.
inline std::vector<Complex> eig_low_complex_dense(const BandedHamiltonian& h,
                                                  int k) {
  const int m = h.dim();
  std::vector<Complex> a = h.to_dense(); // symmetric, so row/col major agree
  std::vector<Complex> w(m);
  const lapack_int info =
      LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', m, a.data(), m, w.data(),
                    nullptr, 1, nullptr, 1);
  if (info != 0)
    throw NumericalError("eig_low: zgeev failed (info " +
                         std::to_string(info) + ", dim " + std::to_string(m) +
                         ")");
  std::sort(w.begin(), w.end(), [](const Complex& lhs, const Complex& rhs) {
    if (lhs.real() != rhs.real()) return lhs.real() < rhs.real();
    return lhs.imag() < rhs.imag();
  });
  w.resize(k);
  return w;
}

} // namespace detail

/// k eigenvalues of the grid Hamiltonian sorted by real part ascending.
inline std::vector<Complex> eig_low(const BandedHamiltonian& h, int k) {
  if (k < 1) throw std::invalid_argument("eig_low: k must be >= 1");
  if (k > h.dim())
    throw std::invalid_argument("eig_low: k exceeds the matrix dimension");
  return h.is_real() ? detail::eig_low_real_banded(h, k)
                     : detail::eig_low_complex_dense(h, k);
}

inline std::vector<Complex> eig_low(const MorseParams& p, const GridSpec& grid,
                                    int k) {
  if (k >= grid.n_points - 2)
    throw std::invalid_argument("eig_low: k must be below n_points - 2");
  return eig_low(build_grid_hamiltonian(p, grid), k);
}

inline std::vector<Complex> eig_low(
    const std::function<Complex(double)>& potential, const GridSpec& grid,
    double mass, double hbar, int k) {
  if (k >= grid.n_points - 2)
    throw std::invalid_argument("eig_low: k must be below n_points - 2");
  return eig_low(build_grid_hamiltonian(potential, grid, mass, hbar), k);
}

struct SpectrumMatch {
  int n;
  Complex analytic;
  Complex numeric;
  double delta;
  bool pass;
};

struct MatchReport {
  std::string case_label;
  GridSpec grid{0.0, 1.0, 16, 4};
  double tol_abs = 0.0;
  std::vector<SpectrumMatch> matches;
  bool pass = true;
};

/**
 * Greedy nearest matching of analytic levels against numeric eigenvalues by
 * complex distance. Passes iff every analytic level is matched within
 * tol_abs; an exhausted numeric list fails the remaining levels.
 */
inline MatchReport match_spectra(std::span<const EnergyLevel> analytic,
                                 std::span<const Complex> numeric,
                                 double tol_abs) {
  if (!(tol_abs > 0.0))
    throw std::invalid_argument("match_spectra: tol_abs must be positive");
  MatchReport report;
  report.tol_abs = tol_abs;
  std::vector<bool> used(numeric.size(), false);
  for (const EnergyLevel& level : analytic) {
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < numeric.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(numeric[j] - level.energy);
      if (d < best_d) {
        best_d = d;
        best = static_cast<int>(j);
      }
    }
    SpectrumMatch entry{level.n, level.energy,
                        Complex(std::numeric_limits<double>::quiet_NaN(),
                                std::numeric_limits<double>::quiet_NaN()),
                        std::numeric_limits<double>::infinity(), false};
    if (best >= 0) {
      used[best] = true;
      entry.numeric = numeric[best];
      entry.delta = best_d;
      entry.pass = best_d <= tol_abs;
    }
    report.pass = report.pass && entry.pass;
    report.matches.push_back(entry);
  }
  return report;
}

} // namespace morse

#endif // MORSE_ORACLE_HPP
