#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

#include "pancake/profile.hpp"

namespace pancake {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct SolverConfig {
  std::size_t grid_size = 512;
  double safety = 0.25;
  double kappa_max_stop = 1e3;
  double area_stop = 1e-3;
  // Time between snapshots; 0 records every step, NaN picks A0/(2 pi)/1800,
  // which keeps runs under 2000 snapshots because -dA/dt >= 2 pi.
  double snapshot_stride = kNaN;
  // Extra snapshot whenever the area drops below this fraction of the area at
  // the previous snapshot; 0 disables. Keeps the endgame sampled for the
  // extinction fit.
  double snapshot_area_ratio = 0.9;
  // Optional hard stop on the run clock; NaN means none.
  double end_time = kNaN;

  // Throws DomainError.
  void validate() const;
};

enum class Termination { curvature_blowup, area_floor, end_time };

std::string_view to_string(Termination cause);
Termination termination_from_string(std::string_view name);

struct Diagnostics {
  double t = 0.0;  // run clock
  double h = 0.0;
  double l = 0.0;
  double area = 0.0;
  double H_min = 0.0;
  double H_max = 0.0;
  double kappa_min = 0.0;
  double kappa_max = 0.0;
  double lambda_max = 0.0;
  double lambda_over_kappa = 0.0;  // integral of lambda/kappa dtheta
  double H_tip = 0.0;              // H at theta = pi
  double H_pole = 0.0;             // H at theta = pi/2
  double area_identity_residual = kNaN;
  double edge_gap = kNaN;
  double harnack_margin = kNaN;
  std::int64_t step = 0;
};

// Scalars of one curve; the post-pass fields stay NaN.
Diagnostics measure(const ProfileCurve& curve, double t, std::int64_t step = 0);

struct RunRecord {
  int dimension = 1;
  double oval_age = kNaN;  // R for approximants, NaN otherwise
  SolverConfig config;
  double dt_max = 0.0;
  double t_start = 0.0;
  Termination termination = Termination::end_time;
  double extinction_time = kNaN;  // T_est on the run clock
  double extinction_raw = kNaN;   // A(t) extrapolation before the defect shift
  double area_defect = 0.0;       // exact initial area minus sampled area
  std::vector<Diagnostics> snapshots;
  std::vector<std::vector<double>> curvatures;  // one per snapshot

  double spacing() const;
  // Time to extinction, t - T_est; negative during the run.
  double relative_time(const Diagnostics& d) const { return d.t - extinction_time; }
  double lifespan() const { return extinction_time - t_start; }
  // Clock of the discrete flow itself: its own extinction, without the shift.
  double flow_extinction() const {
    return std::isnan(extinction_raw) ? extinction_time : extinction_raw;
  }
  double flow_time(const Diagnostics& d) const { return d.t - flow_extinction(); }
  double flow_lifespan() const { return flow_extinction() - t_start; }
  ProfileCurve curve(std::size_t snapshot) const;
};

}  // namespace pancake
