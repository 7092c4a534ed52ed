#include "mml/numerics.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace mml::numerics {

double integrate(const std::function<double(double)>& f,
                 std::span<const double> breakpoints, double tolerance) {
  using boost::math::quadrature::gauss_kronrod;
  double total = 0.0;
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    total += gauss_kronrod<double, 61>::integrate(f, breakpoints[i - 1], breakpoints[i],
                                                  15, tolerance);
  }
  return total;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tolerance) {
  const double pts[] = {a, b};
  return integrate(f, pts, tolerance);
}

std::vector<double> decade_breakpoints(int lo_exp, int hi_exp) {
  std::vector<double> b{0.0};
  for (int e = lo_exp; e <= hi_exp; ++e) b.push_back(std::pow(10.0, e));
  return b;
}

double integrate_2d(const std::function<double(double, double)>& f,
                    std::span<const double> x_breakpoints, double y_lo, double y_hi,
                    double tolerance) {
  auto inner = [&](double x) {
    return integrate([&](double y) { return f(x, y); }, y_lo, y_hi, tolerance);
  };
  return integrate(inner, x_breakpoints, tolerance);
}

double central_difference(const std::function<double(double)>& f, double x, double step) {
  const double h = step * std::max(1.0, std::fabs(x));
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

double relative_error(double a, double b) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

}  // namespace mml::numerics
