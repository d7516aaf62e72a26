#include "pancake/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fields.hpp"
#include "pancake/errors.hpp"

namespace pancake {

ProfileCurve::ProfileCurve(int dimension, std::vector<double> curvature)
    : dimension_(dimension), grid_(), kappa_(std::move(curvature)) {
  if (dimension < 1) throw DomainError("dimension must be >= 1");
  validate_grid_size(kappa_.size());
  for (double k : kappa_) {
    if (!(std::isfinite(k) && k > 0.0)) {
      throw DomainError("curvature must be finite and positive");
    }
  }
  grid_ = AngleGrid::shared(kappa_.size());
}

ProfileCurve ProfileCurve::symmetrized() const {
  std::vector<double> k = kappa_;
  symmetrize(k);
  return ProfileCurve(dimension_, std::move(k));
}

Coordinates reconstruct(const ProfileCurve& curve) {
  const AngleGrid& grid = curve.grid();
  const std::size_t n = curve.size();
  std::vector<double> f(n);
  Coordinates out{std::vector<double>(n), std::vector<double>(n)};

  double perimeter = 0.0;
  for (std::size_t i = 0; i < n; ++i) perimeter += grid.spacing() / curve.curvature(i);

  for (std::size_t i = 0; i < n; ++i) f[i] = grid.cos(i) / curve.curvature(i);
  const double gap_x = detail::integrate_from(grid, f, 0, out.x);
  for (std::size_t i = 0; i < n; ++i) f[i] = grid.sin(i) / curve.curvature(i);
  const double gap_y = detail::integrate_from(grid, f, grid.north_pole(), out.y);

  const double allowed = 1e-9 * perimeter;
  if (std::abs(gap_x) > allowed || std::abs(gap_y) > allowed) {
    throw GeometryError("profile does not close (defect " +
                        std::to_string(std::hypot(gap_x, gap_y)) + ")");
  }
  return out;
}

std::vector<double> lambda_of(const ProfileCurve& curve) {
  std::vector<double> lambda(curve.size());
  detail::LambdaWorkspace work(curve.size());
  if (!detail::rotational_curvature(curve.grid(), curve.curvature(), work, lambda)) {
    throw GeometryError("rotational curvature is not positive; y <= 0 off the poles");
  }
  return lambda;
}

namespace {

std::vector<double> combine(const ProfileCurve& curve, const std::vector<double>& lambda) {
  std::vector<double> H(curve.size());
  const double m = static_cast<double>(curve.dimension() - 1);
  for (std::size_t i = 0; i < H.size(); ++i) H[i] = curve.curvature(i) + m * lambda[i];
  return H;
}

}  // namespace

std::vector<double> mean_curvature(const ProfileCurve& curve) {
  if (curve.dimension() == 1) {
    return {curve.curvature().begin(), curve.curvature().end()};
  }
  return combine(curve, lambda_of(curve));
}

DerivedFields derive(const ProfileCurve& curve) {
  Coordinates c = reconstruct(curve);
  DerivedFields d;
  d.x = std::move(c.x);
  d.y = std::move(c.y);
  d.lambda = lambda_of(curve);
  d.H = combine(curve, d.lambda);
  return d;
}

double enclosed_area(const ProfileCurve& curve) { return enclosed_area(curve, reconstruct(curve)); }

double enclosed_area(const ProfileCurve& curve, const Coordinates& coords) {
  const AngleGrid& grid = curve.grid();
  double sum = 0.0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    sum += (coords.x[i] * grid.sin(i) - coords.y[i] * grid.cos(i)) / curve.curvature(i);
  }
  return 0.5 * grid.spacing() * sum;
}

double lambda_over_kappa(const ProfileCurve& curve, std::span<const double> lambda) {
  double sum = 0.0;
  for (std::size_t i = 0; i < curve.size(); ++i) sum += lambda[i] / curve.curvature(i);
  return curve.spacing() * sum;
}

Displacements displacements(const ProfileCurve& curve) {
  return displacements(curve, reconstruct(curve));
}

Displacements displacements(const ProfileCurve& curve, const Coordinates& coords) {
  const AngleGrid& grid = curve.grid();
  return {coords.x[grid.north_pole()], coords.y[grid.tip()]};
}

std::vector<PlanePoint> upper_branch(const ProfileCurve& curve, const Coordinates& coords) {
  const AngleGrid& grid = curve.grid();
  std::vector<PlanePoint> graph;
  graph.reserve(curve.size() / 2 + 1);
  // theta from 3pi/2 down to pi/2 runs x from -h to h
  for (std::size_t i = grid.south_pole() + 1; i-- > grid.north_pole();) {
    graph.push_back({coords.x[i], coords.y[i]});
  }
  return graph;
}

double graph_height(std::span<const PlanePoint> graph, double x) {
  if (graph.empty() || x < graph.front().x || x > graph.back().x) {
    throw DomainError("abscissa outside the graph");
  }
  auto it = std::lower_bound(graph.begin(), graph.end(), x,
                             [](const PlanePoint& p, double v) { return p.x < v; });
  if (it == graph.begin()) return it->y;
  const PlanePoint& right = *it;
  const PlanePoint& left = *(it - 1);
  if (right.x == left.x) return std::max(left.y, right.y);
  const double s = (x - left.x) / (right.x - left.x);
  return left.y + s * (right.y - left.y);
}

namespace {

// Four-point Lagrange interpolation on a graph sorted by x. The clearance
// quotient divides by x - alpha, so the O(dx^2) chord error of linear
// interpolation would dominate next to the reflection line.
double cubic_height(std::span<const PlanePoint> graph, double x) {
  if (graph.size() < 4) return graph_height(graph, x);
  auto it = std::lower_bound(graph.begin(), graph.end(), x,
                             [](const PlanePoint& p, double v) { return p.x < v; });
  const std::ptrdiff_t right = it - graph.begin();
  const std::ptrdiff_t last = static_cast<std::ptrdiff_t>(graph.size()) - 4;
  const std::ptrdiff_t first = std::clamp<std::ptrdiff_t>(right - 2, 0, last);
  double sum = 0.0;
  for (std::ptrdiff_t j = first; j < first + 4; ++j) {
    double w = 1.0;
    for (std::ptrdiff_t k = first; k < first + 4; ++k) {
      if (k == j) continue;
      const double gap = graph[j].x - graph[k].x;
      if (gap == 0.0) return graph_height(graph, x);
      w *= (x - graph[k].x) / gap;
    }
    sum += w * graph[j].y;
  }
  return sum;
}

}  // namespace

ReflectionResult alexandrov_strict(const ProfileCurve& curve, double alpha) {
  const Coordinates coords = reconstruct(curve);
  const double h = displacements(curve, coords).h;
  if (!(alpha > 0.0 && alpha < h)) {
    throw DomainError("reflection offset must lie in (0, h)");
  }
  const auto graph = upper_branch(curve, coords);
  double margin = std::numeric_limits<double>::infinity();
  for (const PlanePoint& p : graph) {
    if (p.x <= alpha) continue;
    const double reflected = 2.0 * alpha - p.x;
    const double clearance = cubic_height(graph, reflected) - p.y;
    margin = std::min(margin, clearance / (p.x - alpha));
  }
  return {margin > 0.0, margin};
}

ProfileCurve round_profile(double radius, std::size_t size, int dimension) {
  if (!(radius > 0.0 && std::isfinite(radius))) throw DomainError("radius must be positive");
  return ProfileCurve(dimension, std::vector<double>(size, 1.0 / radius));
}

}  // namespace pancake
