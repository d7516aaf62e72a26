#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "pancake/grid.hpp"

namespace pancake {

struct PlanePoint {
  double x = 0.0;
  double y = 0.0;
};

// Convex O(n)-invariant hypersurface, described by the curvature of its
// profile curve on the turning-angle grid.
class ProfileCurve {
 public:
  // Throws DomainError for dimension < 1, a bad grid size, or a curvature
  // that is not finite and positive.
  ProfileCurve(int dimension, std::vector<double> curvature);

  int dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return kappa_.size(); }
  double spacing() const noexcept { return grid_->spacing(); }
  const AngleGrid& grid() const noexcept { return *grid_; }
  std::span<const double> curvature() const noexcept { return kappa_; }
  double curvature(std::size_t i) const noexcept { return kappa_[i]; }

  bool is_symmetric() const { return pancake::is_symmetric(kappa_); }
  ProfileCurve symmetrized() const;

 private:
  int dimension_;
  std::shared_ptr<const AngleGrid> grid_;
  std::vector<double> kappa_;
};

struct Coordinates {
  std::vector<double> x;
  std::vector<double> y;
};

struct DerivedFields {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> lambda;
  std::vector<double> H;
};

struct Displacements {
  double h = 0.0;
  double l = 0.0;
};

struct ReflectionResult {
  bool strict = false;
  // min over points right of alpha of (w(2 alpha - x) - w(x)) / (x - alpha)
  double margin = 0.0;
};

// Trapezoid integration of (cos, sin)/kappa, x anchored at theta = 0 and y at
// theta = pi/2. Throws GeometryError if the curve does not close.
Coordinates reconstruct(const ProfileCurve& curve);

// lambda = -cos(theta)/y off the poles, kappa at the poles. The y used here
// carries the Euler-Maclaurin end correction of the trapezoid rule.
// Throws GeometryError if lambda is not positive.
std::vector<double> lambda_of(const ProfileCurve& curve);

std::vector<double> mean_curvature(const ProfileCurve& curve);

DerivedFields derive(const ProfileCurve& curve);

// Trapezoid rule for (1/2) * integral of (x sin - y cos)/kappa dtheta.
double enclosed_area(const ProfileCurve& curve);
double enclosed_area(const ProfileCurve& curve, const Coordinates& coords);

// Trapezoid rule for the integral of lambda/kappa dtheta.
double lambda_over_kappa(const ProfileCurve& curve, std::span<const double> lambda);

Displacements displacements(const ProfileCurve& curve);
Displacements displacements(const ProfileCurve& curve, const Coordinates& coords);

// Nodes with theta in [pi/2, 3pi/2], ordered by increasing x.
std::vector<PlanePoint> upper_branch(const ProfileCurve& curve, const Coordinates& coords);

// Linear interpolation on a graph sorted by x. Throws DomainError outside.
double graph_height(std::span<const PlanePoint> graph, double x);

// Throws DomainError unless 0 < alpha < h.
ReflectionResult alexandrov_strict(const ProfileCurve& curve, double alpha);

// Round sphere of the given radius (kappa = 1/r everywhere).
ProfileCurve round_profile(double radius, std::size_t size, int dimension);

}  // namespace pancake
