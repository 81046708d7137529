#pragma once

#include <array>
#include <functional>
#include <vector>

namespace selfcomm {

/// Golden-section minimization of f on [a, b]; stops when the bracket
/// shrinks below x_tol. Returns (argmin, min).
std::pair<double, double> golden_section_min(const std::function<double(double)>& f, double a,
                                             double b, double x_tol);

struct NelderMeadResult {
    std::array<double, 2> x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Two-dimensional Nelder-Mead descent. Stops when the simplex diameter
/// falls below x_tol or after max_iter reflections.
NelderMeadResult nelder_mead_2d(const std::function<double(std::array<double, 2>)>& f,
                                std::array<double, 2> start, double scale, double x_tol,
                                int max_iter = 800);

/// Scan a periodic function on [lo, hi) with n grid points, then refine
/// every grid-local minimum by golden section. Returns the best (t, f(t))
/// found; never worse than the best grid sample. Ties break to smaller t.
std::pair<double, double> periodic_min_scan(const std::function<double(double)>& f, double lo,
                                            double hi, int n, double refine_tol);

/// Composite Gauss-Legendre quadrature of f over [a, b] with panels of
/// width <= max_panel; spectrally accurate for analytic integrands.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double max_panel = 0.5);

}  // namespace selfcomm
