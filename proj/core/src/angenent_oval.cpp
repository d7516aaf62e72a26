#include "pancake/angenent_oval.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "pancake/errors.hpp"

namespace pancake {

namespace {

void require_negative(double t) {
  if (!(t < 0.0)) throw DomainError("oval time must be negative, got " + std::to_string(t));
}

// log(a^2) - t, written to survive a^2 underflowing: log(a^2) = -log(expm1(-2t)).
double log_a2_minus_t(double t) { return t - std::log(-std::expm1(2.0 * t)); }

// Integral of 1/sqrt(a^2 + sin^2 w) over [lo, hi] with 0 <= lo < hi.
// The 1/sqrt(a^2 + w^2) part is done in closed form, the smooth rest by Gauss.
double cell_length(double a, double lo, double hi) {
  const double singular = std::asinh(hi / a) - std::asinh(lo / a);
  auto smooth = [a](double w) {
    const double s = std::sin(w);
    return 1.0 / std::sqrt(a * a + s * s) - 1.0 / std::sqrt(a * a + w * w);
  };
  const double rest = boost::math::quadrature::gauss<double, 15>::integrate(smooth, lo, hi);
  return singular + rest;
}

}  // namespace

double oval_a2(double t) {
  require_negative(t);
  return 1.0 / std::expm1(-2.0 * t);
}

double oval_curvature(double theta, double t) {
  const double c = std::cos(theta);
  return std::sqrt(oval_a2(t) + c * c);
}

PlanePoint oval_point(double theta, double t) {
  const double a2 = oval_a2(t);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double q = std::sqrt(c * c + a2);
  const double x = std::atan2(s, q);
  // y = -t + log((q - c)/sqrt(1 + a^2)); for c > 0 use q - c = a^2/(q + c).
  const double tail = -0.5 * std::log1p(a2);
  const double y = (c <= 0.0) ? -t + std::log(q - c) + tail
                              : log_a2_minus_t(t) - std::log(q + c) + tail;
  return {x, y};
}

OvalExtents oval_extents(double t) {
  require_negative(t);
  const double h = std::acos(std::exp(t));
  // arccosh(e^{-t}) = -t + log(1 + sqrt(1 - e^{2t}))
  const double l = -t + std::log1p(std::sqrt(-std::expm1(2.0 * t)));
  return {h, l};
}

double oval_residual(PlanePoint p, double t) {
  return std::cos(p.x) - 0.5 * (std::exp(t + p.y) + std::exp(t - p.y));
}

double grim_height(double x, double t) {
  if (!(std::abs(x) < 0.5 * std::numbers::pi)) {
    throw DomainError("Grim profile undefined for |x| >= pi/2");
  }
  return t - std::log(std::cos(x));
}

ProfileCurve sample_profile(double t, std::size_t size, int dimension) {
  const double a2 = oval_a2(t);
  validate_grid_size(size);
  const auto grid = AngleGrid::shared(size);
  std::vector<double> kappa(size);
  for (std::size_t i = 0; i < size; ++i) {
    const double c = grid->cos(i);
    kappa[i] = std::sqrt(a2 + c * c);
  }
  return ProfileCurve(dimension, std::move(kappa));
}

ProfileCurve sample_profile_averaged(double t, std::size_t size, int dimension) {
  const double a = std::sqrt(oval_a2(t));
  validate_grid_size(size);
  if (!(a > 0.0)) throw DomainError("oval time too negative: a(t) underflows");
  const auto grid = AngleGrid::shared(size);
  const double h = grid->spacing();
  const std::size_t q = size / 4;

  // Cell m is [m - 1/2, m + 1/2] h measured from the nearest pole; |cos| = |sin w|.
  std::vector<double> by_distance(q + 1);
  by_distance[0] = h / (2.0 * cell_length(a, 0.0, 0.5 * h));
  for (std::size_t m = 1; m <= q; ++m) {
    const double lo = (static_cast<double>(m) - 0.5) * h;
    const double hi = (static_cast<double>(m) + 0.5) * h;
    by_distance[m] = h / cell_length(a, lo, hi);
  }

  std::vector<double> kappa(size);
  for (std::size_t i = 0; i < size; ++i) {
    const std::size_t pole = (i <= 2 * q) ? q : 3 * q;
    const std::size_t m = (i > pole) ? i - pole : pole - i;
    kappa[i] = by_distance[m];
  }
  return ProfileCurve(dimension, std::move(kappa));
}

}  // namespace pancake
