#ifndef MORSE_POTENTIAL_HPP
#define MORSE_POTENTIAL_HPP

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "morse/types.hpp"

namespace morse {

/// V(x) = v1 e^{-2 alpha x} - v2 e^{-alpha x}
inline Complex eval_potential(const MorseParams& p, double x) {
  const Complex e = std::exp(-p.alpha * x);
  return p.v1 * e * e - p.v2 * e;
}

/// dV/dx, used by the classical dynamics checks.
inline Complex eval_potential_derivative(const MorseParams& p, double x) {
  const Complex e = std::exp(-p.alpha * x);
  return -2.0 * p.alpha * p.v1 * e * e + p.alpha * p.v2 * e;
}

enum class SymmetryClass { Hermitian, PTSymmetric, NonPTNonHermitian };

inline std::string to_string(SymmetryClass c) {
  switch (c) {
  case SymmetryClass::Hermitian: return "Hermitian";
  case SymmetryClass::PTSymmetric: return "PTSymmetric";
  case SymmetryClass::NonPTNonHermitian: return "NonPTNonHermitian";
  }
  return "?";
}

/// 41 probe points, uniform on [-5/|alpha|, 5/|alpha|]; exponentials vary on
/// the natural length 1/|alpha|, so this window samples all regimes.
inline std::vector<double> default_probes(const MorseParams& p) {
  const int n = 41;
  const double half_width = 5.0 / std::abs(p.alpha);
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i)
    xs[i] = -half_width + 2.0 * half_width * i / (n - 1);
  xs[n / 2] = 0.0; // keep the set exactly symmetric
  return xs;
}

/**
 * Classify the potential at an absolute tolerance `tol`:
 *   Hermitian           max |Im V(x)| <= tol over probes,
 *   PTSymmetric         else max |conj(V(-x)) - V(x)| <= tol,
 *   NonPTNonHermitian   otherwise.
 *
 * The probe set must be nonempty and symmetric about 0.
 */
inline SymmetryClass classify_symmetry(const MorseParams& p,
                                       std::span<const double> probes,
                                       double tol) {
  if (probes.empty())
    throw std::invalid_argument("classify_symmetry: empty probe set");
  if (!(tol > 0.0))
    throw std::invalid_argument("classify_symmetry: tol must be positive");
  std::vector<double> sorted(probes.begin(), probes.end());
  std::sort(sorted.begin(), sorted.end());
  for (double x : sorted) {
    const double eps = 1e-12 * std::max(1.0, std::abs(x));
    auto it = std::lower_bound(sorted.begin(), sorted.end(), -x - eps);
    if (it == sorted.end() || std::abs(*it + x) > eps)
      throw std::invalid_argument(
          "classify_symmetry: probe set not symmetric about 0");
  }

  double max_imag = 0.0, max_pt = 0.0;
  for (double x : probes) {
    const Complex vx = eval_potential(p, x);
    const Complex vmx = eval_potential(p, -x);
    max_imag = std::max(max_imag, std::abs(vx.imag()));
    max_pt = std::max(max_pt, std::abs(std::conj(vmx) - vx));
  }
  if (max_imag <= tol) return SymmetryClass::Hermitian;
  if (max_pt <= tol) return SymmetryClass::PTSymmetric;
  return SymmetryClass::NonPTNonHermitian;
}

/// Default probes, tolerance 1e-10 relative to max |V| over the probes.
inline SymmetryClass classify_symmetry(const MorseParams& p) {
  const auto probes = default_probes(p);
  double vmax = 0.0;
  for (double x : probes) vmax = std::max(vmax, std::abs(eval_potential(p, x)));
  const double tol = 1e-10 * std::max(vmax, 1e-300);
  return classify_symmetry(p, probes, tol);
}

// --- preset families -------------------------------------------------------
//
// Two standard complexifications of the Morse parameters:
//   pt_imaginary_alpha   alpha -> i a with real v1, v2 (PT symmetric),
//   non_pt_complex       v1 = (A+iB)^2, v2 = (2C+1)(A+iB) with real alpha,
// plus the plain real (Hermitian) family.

inline MorseParams preset_hermitian(double v1, double v2, double alpha,
                                    double mass = 1.0, double hbar = 1.0) {
  return MorseParams(Complex(v1, 0.0), Complex(v2, 0.0), Complex(alpha, 0.0),
                     mass, hbar);
}

inline MorseParams preset_pt_imaginary_alpha(double v1, double v2, double a,
                                             double mass = 1.0,
                                             double hbar = 1.0) {
  return MorseParams(Complex(v1, 0.0), Complex(v2, 0.0), Complex(0.0, a), mass,
                     hbar);
}

inline MorseParams preset_non_pt_complex(double A, double B, double C,
                                         double alpha, double mass = 1.0,
                                         double hbar = 1.0) {
  const Complex ab(A, B);
  return MorseParams(ab * ab, (2.0 * C + 1.0) * ab, Complex(alpha, 0.0), mass,
                     hbar);
}

/// String-keyed preset constructor used by the JSON/CLI front ends.
/// `raw` holds the preset's real parameters by name.
inline MorseParams make_preset(std::string_view kind,
                               const std::map<std::string, double>& raw,
                               double mass = 1.0, double hbar = 1.0) {
  auto need = [&raw, kind](const std::string& key) {
    auto it = raw.find(key);
    if (it == raw.end())
      throw std::invalid_argument("make_preset: preset '" + std::string(kind) +
                                  "' requires parameter '" + key + "'");
    return it->second;
  };
  if (kind == "hermitian")
    return preset_hermitian(need("v1"), need("v2"), need("alpha"), mass, hbar);
  if (kind == "pt_imaginary_alpha") {
    // the imaginary coefficient may be spelled "a" or "alpha"
    const double a = raw.count("a") ? raw.at("a") : need("alpha");
    return preset_pt_imaginary_alpha(need("v1"), need("v2"), a, mass, hbar);
  }
  if (kind == "non_pt_complex")
    return preset_non_pt_complex(need("A"), need("B"), need("C"), need("alpha"),
                                 mass, hbar);
  throw std::invalid_argument("make_preset: unknown preset kind '" +
                              std::string(kind) + "'");
}

} // namespace morse

#endif // MORSE_POTENTIAL_HPP
