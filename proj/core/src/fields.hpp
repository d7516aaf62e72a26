#pragma once

#include <span>
#include <vector>

#include "pancake/grid.hpp"

namespace pancake::detail {

// Trapezoid antiderivative of f vanishing at `anchor`, integrated outward over
// half the circle in both directions so the two halves use mirrored
// arithmetic. Returns the closure defect, i.e. the integral over the circle.
double integrate_from(const AngleGrid& grid, std::span<const double> f, std::size_t anchor,
                      std::span<double> out);

struct LambdaWorkspace {
  std::vector<double> f;
  std::vector<double> y;
  explicit LambdaWorkspace(std::size_t size) : f(size), y(size) {}
};

// lambda = -cos/y with the end-corrected trapezoid y, lambda = kappa at the
// poles. Returns false if some lambda is not finite and positive.
bool rotational_curvature(const AngleGrid& grid, std::span<const double> kappa,
                          LambdaWorkspace& work, std::span<double> lambda);

}  // namespace pancake::detail
