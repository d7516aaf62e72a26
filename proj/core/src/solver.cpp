#include "pancake/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fields.hpp"
#include "pancake/errors.hpp"

namespace pancake {

namespace {

class Kernel {
 public:
  Kernel(const AngleGrid& grid, int dimension)
      : grid_(grid), dimension_(dimension), work_(grid.size()), lambda_(grid.size()), H_(grid.size()) {}

  // Returns false on a non-positive kappa or lambda.
  bool operator()(std::span<const double> kappa, std::span<double> out) {
    const std::size_t n = grid_.size();
    for (double k : kappa) {
      if (!(k > 0.0) || !std::isfinite(k)) return false;
    }
    if (dimension_ == 1) {
      std::copy(kappa.begin(), kappa.end(), H_.begin());
    } else {
      if (!detail::rotational_curvature(grid_, kappa, work_, lambda_)) return false;
      const double m = static_cast<double>(dimension_ - 1);
      for (std::size_t i = 0; i < n; ++i) H_[i] = kappa[i] + m * lambda_[i];
    }
    const double inv_h2 = 1.0 / (grid_.spacing() * grid_.spacing());
    for (std::size_t i = 0; i < n; ++i) {
      const double left = H_[i == 0 ? n - 1 : i - 1];
      const double right = H_[i + 1 == n ? 0 : i + 1];
      const double d2 = (right - 2.0 * H_[i] + left) * inv_h2;
      out[i] = kappa[i] * kappa[i] * (d2 + H_[i]);
    }
    symmetrize(out);
    return true;
  }

 private:
  const AngleGrid& grid_;
  int dimension_;
  detail::LambdaWorkspace work_;
  std::vector<double> lambda_;
  std::vector<double> H_;
};

class Integrator {
 public:
  Integrator(const AngleGrid& grid, int dimension)
      : kernel_(grid, dimension), k1_(grid.size()), k2_(grid.size()), k3_(grid.size()),
        k4_(grid.size()), stage_(grid.size()) {}

  // Advances kappa in place; returns false if a stage or the result is invalid.
  bool advance(std::vector<double>& kappa, double dt) {
    const std::size_t n = kappa.size();
    if (!kernel_(kappa, k1_)) return false;
    for (std::size_t i = 0; i < n; ++i) stage_[i] = kappa[i] + 0.5 * dt * k1_[i];
    if (!kernel_(stage_, k2_)) return false;
    for (std::size_t i = 0; i < n; ++i) stage_[i] = kappa[i] + 0.5 * dt * k2_[i];
    if (!kernel_(stage_, k3_)) return false;
    for (std::size_t i = 0; i < n; ++i) stage_[i] = kappa[i] + dt * k3_[i];
    if (!kernel_(stage_, k4_)) return false;
    const double w = dt / 6.0;
    for (std::size_t i = 0; i < n; ++i) {
      kappa[i] += w * (k1_[i] + 2.0 * k2_[i] + 2.0 * k3_[i] + k4_[i]);
    }
    symmetrize(kappa);
    return std::all_of(kappa.begin(), kappa.end(),
                       [](double k) { return k > 0.0 && std::isfinite(k); });
  }

 private:
  Kernel kernel_;
  std::vector<double> k1_, k2_, k3_, k4_, stage_;
};

double max_curvature(std::span<const double> kappa) {
  return *std::max_element(kappa.begin(), kappa.end());
}

double dt_for(std::span<const double> kappa, double spacing, double safety) {
  const double k = max_curvature(kappa);
  return safety * spacing * spacing / (k * k);
}

}  // namespace

std::vector<double> time_derivative(const ProfileCurve& curve) {
  std::vector<double> out(curve.size());
  Kernel kernel(curve.grid(), curve.dimension());
  if (!kernel(curve.curvature(), out)) {
    throw GeometryError("invalid state: curvature or rotational curvature not positive");
  }
  return out;
}

std::vector<double> time_derivative(const FlowState& state) { return time_derivative(state.curve); }

double stable_dt(const FlowState& state, const SolverConfig& config) {
  return dt_for(state.curve.curvature(), state.curve.spacing(), config.safety);
}

FlowState step(const FlowState& state, double dt) {
  if (!(dt > 0.0 && std::isfinite(dt))) throw DomainError("time step must be positive");
  std::vector<double> kappa(state.curve.curvature().begin(), state.curve.curvature().end());
  Integrator integrator(state.curve.grid(), state.curve.dimension());
  if (!integrator.advance(kappa, dt)) {
    throw InstabilityError("step produced a non-positive or non-finite curvature", state.t);
  }
  return {ProfileCurve(state.curve.dimension(), std::move(kappa)), state.t + dt,
          state.step_count + 1};
}

RunRecord evolve(const FlowState& initial, const SolverConfig& config,
                 const SnapshotObserver& observer) {
  config.validate();
  if (config.grid_size != initial.curve.size()) {
    throw DomainError("config grid size does not match the initial curve");
  }
  const ProfileCurve& c0 = initial.curve;
  const AngleGrid& grid = c0.grid();
  const int dimension = c0.dimension();

  RunRecord record;
  record.dimension = dimension;
  record.config = config;
  record.t_start = initial.t;

  std::vector<double> kappa(c0.curvature().begin(), c0.curvature().end());
  symmetrize(kappa);
  double t = initial.t;
  std::int64_t steps = initial.step_count;

  auto snapshot = [&](const ProfileCurve& curve) {
    Diagnostics d = measure(curve, t, steps);
    record.snapshots.push_back(d);
    record.curvatures.push_back(kappa);
    if (observer) observer(d);
    return d.area;
  };

  ProfileCurve current(dimension, kappa);
  double area = snapshot(current);
  const double stride = std::isnan(config.snapshot_stride)
                            ? area / (2.0 * std::numbers::pi) / 1800.0
                            : config.snapshot_stride;
  double last_t = t;
  double last_area = area;
  bool recorded = true;
  Integrator integrator(grid, dimension);
  const bool timed = !std::isnan(config.end_time);

  while (true) {
    if (max_curvature(kappa) >= config.kappa_max_stop) {
      record.termination = Termination::curvature_blowup;
      break;
    }
    if (area <= config.area_stop) {
      record.termination = Termination::area_floor;
      break;
    }
    if (timed && t >= config.end_time) {
      record.termination = Termination::end_time;
      break;
    }
    double dt = dt_for(kappa, grid.spacing(), config.safety);
    bool last_step = false;
    if (timed && t + dt >= config.end_time) {
      dt = config.end_time - t;
      last_step = true;
    }
    if (!integrator.advance(kappa, dt)) {
      throw InstabilityError("step produced a non-positive or non-finite curvature", t);
    }
    t = last_step ? config.end_time : t + dt;
    ++steps;
    record.dt_max = std::max(record.dt_max, dt);

    current = ProfileCurve(dimension, kappa);
    area = enclosed_area(current);
    recorded = false;
    if (stride == 0.0 || t - last_t >= stride ||
        area <= config.snapshot_area_ratio * last_area) {
      snapshot(current);
      last_t = t;
      last_area = area;
      recorded = true;
    }
  }
  if (!recorded) snapshot(current);
  return record;
}

double estimate_extinction(const RunRecord& record) {
  const auto& s = record.snapshots;
  if (s.size() < kExtinctionWindow) {
    throw InsufficientDataError("extinction fit needs at least 8 snapshots");
  }
  const std::size_t first = s.size() - kExtinctionWindow;
  double mt = 0.0, ma = 0.0;
  for (std::size_t i = first; i < s.size(); ++i) {
    mt += s[i].t;
    ma += s[i].area;
  }
  mt /= kExtinctionWindow;
  ma /= kExtinctionWindow;
  double stt = 0.0, sta = 0.0;
  for (std::size_t i = first; i < s.size(); ++i) {
    stt += (s[i].t - mt) * (s[i].t - mt);
    sta += (s[i].t - mt) * (s[i].area - ma);
  }
  const double slope = sta / stt;
  if (!(slope < 0.0)) throw InsufficientDataError("area is not decreasing over the fit window");
  return mt - ma / slope;
}

}  // namespace pancake
