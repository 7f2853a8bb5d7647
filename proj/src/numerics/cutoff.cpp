#include "radonlike/numerics/cutoff.hpp"

#include <cmath>

namespace radonlike {

namespace {
double g(double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; }
}  // namespace

double phi0(double t) {
  const double a = std::abs(t);
  if (a <= 1.0) return 1.0;
  if (a >= 2.0) return 0.0;
  const double left = g(2.0 - a);
  return left / (left + g(a - 1.0));
}

double phi_product(std::span<const double> z) {
  double p = 1.0;
  for (double v : z) {
    p *= phi0(v);
    if (p == 0.0) break;
  }
  return p;
}

double phi_radial(std::span<const double> xi) {
  double s = 0.0;
  for (double v : xi) s += v * v;
  return phi0(2.0 * std::sqrt(s));
}

double annulus_bump(double t) {
  const double a = std::abs(t);
  if (a <= 1.0 || a >= 2.0) return 0.0;
  return std::exp(4.0 - 1.0 / ((a - 1.0) * (2.0 - a)));
}

}  // namespace radonlike
