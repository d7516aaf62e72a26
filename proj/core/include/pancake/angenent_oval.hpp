#pragma once

#include <cstddef>

#include "pancake/profile.hpp"

namespace pancake {

struct OvalExtents {
  double h = 0.0;  // half width, attained at theta = pi/2
  double l = 0.0;  // half height, attained at theta = pi
};

// a^2(t) = 1 / (e^{-2t} - 1). Throws DomainError for t >= 0.
double oval_a2(double t);

double oval_curvature(double theta, double t);

PlanePoint oval_point(double theta, double t);

OvalExtents oval_extents(double t);

// cos x - e^t cosh y: zero on the oval, positive inside.
double oval_residual(PlanePoint p, double t);

// Unit speed Grim profile t - log cos x. Throws DomainError for |x| >= pi/2.
double grim_height(double x, double t);

// Point samples kappa_i = oval_curvature(theta_i, t).
ProfileCurve sample_profile(double t, std::size_t size, int dimension);

// kappa_i = dtheta / (arc length of the oval over the cell of theta_i).
// Unlike point samples these stay meaningful when the pole curvature a(t) is
// far below the grid spacing, which is the regime of old ovals.
ProfileCurve sample_profile_averaged(double t, std::size_t size, int dimension);

}  // namespace pancake
