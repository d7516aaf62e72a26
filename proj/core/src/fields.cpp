#include "fields.hpp"

#include <cmath>

namespace pancake::detail {

double integrate_from(const AngleGrid& grid, std::span<const double> f, std::size_t anchor,
                      std::span<double> out) {
  const std::size_t n = grid.size();
  const std::size_t half = n / 2;
  const double w = 0.5 * grid.spacing();
  const auto a = static_cast<std::ptrdiff_t>(anchor);

  out[anchor] = 0.0;
  std::size_t prev = anchor;
  for (std::size_t k = 1; k <= half; ++k) {
    const std::size_t j = grid.wrap(a + static_cast<std::ptrdiff_t>(k));
    out[j] = out[prev] + w * (f[prev] + f[j]);
    prev = j;
  }
  const double forward_end = out[prev];

  prev = anchor;
  for (std::size_t k = 1; k < half; ++k) {
    const std::size_t j = grid.wrap(a - static_cast<std::ptrdiff_t>(k));
    out[j] = out[prev] - w * (f[prev] + f[j]);
    prev = j;
  }
  const std::size_t opposite = grid.wrap(a + static_cast<std::ptrdiff_t>(half));
  const double backward_end = out[prev] - w * (f[prev] + f[opposite]);
  out[opposite] = 0.5 * (forward_end + backward_end);
  return forward_end - backward_end;
}

bool rotational_curvature(const AngleGrid& grid, std::span<const double> kappa,
                          LambdaWorkspace& work, std::span<double> lambda) {
  const std::size_t n = grid.size();
  const std::size_t north = grid.north_pole();
  const std::size_t south = grid.south_pole();
  const double h = grid.spacing();
  auto& f = work.f;
  auto& y = work.y;

  for (std::size_t i = 0; i < n; ++i) f[i] = grid.sin(i) / kappa[i];
  integrate_from(grid, f, north, y);

  // Euler-Maclaurin: trapezoid minus h^2/12 (f'(theta) - f'(pi/2)). The slope
  // at the north pole vanishes by symmetry.
  const double c = h / 24.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double slope_times_2h = f[(i + 1) % n] - f[(i + n - 1) % n];
    y[i] -= c * slope_times_2h;
  }

  bool ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == north || i == south) {
      lambda[i] = kappa[i];
    } else {
      lambda[i] = -grid.cos(i) / y[i];
    }
    ok = ok && std::isfinite(lambda[i]) && lambda[i] > 0.0;
  }
  return ok;
}

}  // namespace pancake::detail
