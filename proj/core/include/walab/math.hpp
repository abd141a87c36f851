#pragma once

#include <functional>
#include <vector>

namespace walab {

// Standard normal density, distribution function and its inverse.
double normal_pdf(double x);
double normal_cdf(double x);

/// Inverse standard normal CDF, accurate to full double precision
/// (rational approximation polished by one Halley step on normal_cdf).
double normal_quantile(double p);

/// Adaptive Simpson quadrature of f on [a, b] with absolute tolerance.
/// Throws std::runtime_error when the recursion depth budget is exhausted
/// before the tolerance is met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-9, int max_depth = 40);

/// Same, but splits [a, b] at the given interior breakpoints first so the
/// integrand only needs to be smooth piecewise.
double integrate_with_breakpoints(const std::function<double(double)>& f,
                                  double a, double b,
                                  std::vector<double> breakpoints,
                                  double abs_tol = 1e-9, int max_depth = 40);

/// Geometric grid of n values from hi down to lo (inclusive endpoints).
std::vector<double> geometric_grid(double hi, double lo, int n);

}  // namespace walab
