#ifndef MORSE_QUADRATURE_HPP
#define MORSE_QUADRATURE_HPP

#include <span>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "morse/types.hpp"

namespace morse {

namespace detail {

// Integral over [a, b] of the quadratic interpolant through the three
// samples starting at index i0. Evaluated in coordinates relative to a;
// in global coordinates the antiderivative differences cancel
// catastrophically once the grid is fine.
inline double quadratic_panel(std::span<const double> s,
                              std::span<const double> f, std::size_t i0,
                              double a, double b) {
  const double x0 = s[i0] - a, x1 = s[i0 + 1] - a, x2 = s[i0 + 2] - a;
  const double w = b - a;
  double total = 0.0;
  const double xs[3] = {x0, x1, x2};
  for (int j = 0; j < 3; ++j) {
    const double o0 = xs[(j + 1) % 3];
    const double o1 = xs[(j + 2) % 3];
    const double den = (xs[j] - o0) * (xs[j] - o1);
    // antiderivative of (x-o0)(x-o1) between 0 and w
    const double integral =
        w * w * w / 3.0 - (o0 + o1) * w * w / 2.0 + o0 * o1 * w;
    total += f[i0 + j] * integral / den;
  }
  return total;
}

} // namespace detail

/**
 * Cumulative composite Simpson quadrature of samples f(s) on a strictly
 * increasing grid: returns t with t[0] = 0 and t[i] = integral of f from
 * s[0] to s[i]. Each subinterval is integrated with the quadratic through
 * its containing sample triple; interior intervals average the left- and
 * right-shifted triples, which restores the O(h^4) composite-Simpson order.
 */
inline std::vector<double> cumulative_simpson(std::span<const double> s,
                                              std::span<const double> f) {
  const std::size_t n = s.size();
  if (n != f.size())
    throw std::invalid_argument("cumulative_simpson: size mismatch");
  if (n < 2)
    throw std::invalid_argument("cumulative_simpson: need at least 2 samples");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!(s[i + 1] > s[i]))
      throw std::invalid_argument(
          "cumulative_simpson: grid must be strictly increasing");

  std::vector<double> t(n, 0.0);
  if (n == 2) {
    t[1] = 0.5 * (f[0] + f[1]) * (s[1] - s[0]);
    return t;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double a = s[i], b = s[i + 1];
    double est = 0.0;
    int count = 0;
    if (i >= 1) {
      est += detail::quadratic_panel(s, f, i - 1, a, b);
      ++count;
    }
    if (i + 2 < n) {
      est += detail::quadratic_panel(s, f, i, a, b);
      ++count;
    }
    t[i + 1] = t[i] + est / count;
  }
  return t;
}

/**
 * Adaptive Gauss-Kronrod integration of f over [a, b]. Throws NumericalError
 * when the error estimate does not reach max(abs_tol, rel_tol*|I|) at the
 * maximum refinement depth.
 */
template <typename F>
double integrate_adaptive(F&& f, double a, double b, double rel_tol = 1e-10,
                          double abs_tol = 1e-14, unsigned max_depth = 15) {
  double error = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      f, a, b, max_depth, 1e-14, &error);
  if (error > std::max(abs_tol, rel_tol * std::abs(value)))
    throw NumericalError(
        "integrate_adaptive: quadrature did not converge (estimated error " +
        std::to_string(error) + ")");
  return value;
}

} // namespace morse

#endif // MORSE_QUADRATURE_HPP
