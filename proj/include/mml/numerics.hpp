#ifndef MML_NUMERICS_HPP
#define MML_NUMERICS_HPP

#include <functional>
#include <span>
#include <vector>

namespace mml::numerics {

/// Adaptive Gauss-Kronrod integral of f over consecutive breakpoints
/// b[0] < b[1] < ... ; f is never evaluated at a breakpoint.
double integrate(const std::function<double(double)>& f,
                 std::span<const double> breakpoints, double tolerance = 1e-12);

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tolerance = 1e-12);

/// Breakpoints 0, 10^lo_exp, ..., 10^hi_exp for integrands concentrated near
/// zero on a long half-line.
std::vector<double> decade_breakpoints(int lo_exp, int hi_exp);

/// Iterated integral of f(x, y) over x-breakpoints and y in [y_lo, y_hi].
double integrate_2d(const std::function<double(double, double)>& f,
                    std::span<const double> x_breakpoints, double y_lo, double y_hi,
                    double tolerance = 1e-10);

/// Central finite difference (f(x+h) - f(x-h)) / 2h, h = step * max(1, |x|).
double central_difference(const std::function<double(double)>& f, double x,
                          double step = 1e-6);

/// |a - b| / max(|a|, |b|), or 0 when both are 0.
double relative_error(double a, double b);

}  // namespace mml::numerics

#endif  // MML_NUMERICS_HPP
