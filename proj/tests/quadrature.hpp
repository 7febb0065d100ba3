#pragma once

// Numerical moments of the unit-variance arcsine density 1/(pi sqrt(2 - x^2))
// on (-sqrt2, sqrt2), as an oracle independent of the closed form.

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>

namespace monotone::testing {

inline double arcsine_quadrature(int order) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  const double r = std::sqrt(2.0);
  // xc is the signed distance to the nearer endpoint, which keeps 2 - x^2 accurate there.
  auto f = [order, r](double x, double xc) {
    const double d = std::abs(xc) * (2 * r - std::abs(xc));
    return std::pow(x, order) / (std::numbers::pi * std::sqrt(d));
  };
  return integrator.integrate(f, -r, r);
}

}  // namespace monotone::testing
