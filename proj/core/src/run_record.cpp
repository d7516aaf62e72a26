#include "pancake/run_record.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pancake/errors.hpp"

namespace pancake {

void SolverConfig::validate() const {
  validate_grid_size(grid_size);
  if (!(safety > 0.0 && safety <= 0.5)) throw DomainError("safety must lie in (0, 0.5]");
  if (!(kappa_max_stop > 0.0)) throw DomainError("kappa_max_stop must be positive");
  if (!(area_stop > 0.0)) throw DomainError("area_stop must be positive");
  if (!std::isnan(snapshot_stride) && !(snapshot_stride >= 0.0 && std::isfinite(snapshot_stride))) {
    throw DomainError("snapshot stride must be >= 0");
  }
  if (!(snapshot_area_ratio >= 0.0 && snapshot_area_ratio < 1.0)) {
    throw DomainError("snapshot area ratio must lie in [0, 1)");
  }
  if (std::isinf(end_time)) throw DomainError("end time must be finite");
}

std::string_view to_string(Termination cause) {
  switch (cause) {
    case Termination::curvature_blowup: return "curvature_blowup";
    case Termination::area_floor: return "area_floor";
    case Termination::end_time: return "end_time";
  }
  return "end_time";
}

Termination termination_from_string(std::string_view name) {
  if (name == "curvature_blowup") return Termination::curvature_blowup;
  if (name == "area_floor") return Termination::area_floor;
  if (name == "end_time") return Termination::end_time;
  throw DomainError("unknown termination cause: " + std::string(name));
}

Diagnostics measure(const ProfileCurve& curve, double t, std::int64_t step) {
  const AngleGrid& grid = curve.grid();
  const std::size_t n = curve.size();
  const Coordinates coords = reconstruct(curve);
  const std::vector<double> lambda = lambda_of(curve);
  const double m = static_cast<double>(curve.dimension() - 1);

  Diagnostics d;
  d.t = t;
  d.step = step;
  const Displacements disp = displacements(curve, coords);
  d.h = disp.h;
  d.l = disp.l;
  d.area = enclosed_area(curve, coords);
  d.lambda_over_kappa = lambda_over_kappa(curve, lambda);

  const auto kappa = curve.curvature();
  d.kappa_min = *std::min_element(kappa.begin(), kappa.end());
  d.kappa_max = *std::max_element(kappa.begin(), kappa.end());
  d.lambda_max = *std::max_element(lambda.begin(), lambda.end());
  d.H_min = std::numeric_limits<double>::infinity();
  d.H_max = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double H = kappa[i] + m * lambda[i];
    d.H_min = std::min(d.H_min, H);
    d.H_max = std::max(d.H_max, H);
  }
  d.H_tip = kappa[grid.tip()] + m * lambda[grid.tip()];
  d.H_pole = kappa[grid.north_pole()] + m * lambda[grid.north_pole()];
  return d;
}

double RunRecord::spacing() const {
  return 2.0 * std::numbers::pi / static_cast<double>(config.grid_size);
}

ProfileCurve RunRecord::curve(std::size_t snapshot) const {
  return ProfileCurve(dimension, curvatures.at(snapshot));
}

}  // namespace pancake
