#pragma once

#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pancake/profile.hpp"
#include "pancake/run_record.hpp"
#include "pancake/solver.hpp"

namespace pancake {

inline constexpr double kDefaultEdgeDelta = std::numbers::pi / 8.0;
inline constexpr double kHarnackTolerance = 1e-4;

// Evolves the cell-sampled oval at t = -R from run time 0 to extinction, then
// fills T_est, edge gaps, area identity residuals and Harnack margins.
RunRecord run_approximant(int dimension, double oval_age, const SolverConfig& config,
                          double edge_delta = kDefaultEdgeDelta,
                          const SnapshotObserver& observer = {});

// Fills the post-pass Diagnostics fields of a record that already has T_est.
void annotate(RunRecord& record, double edge_delta = kDefaultEdgeDelta);

struct BoundEntry {
  std::string id;
  double margin = kNaN;   // normalized; NaN when no snapshot is in the window
  double worst_t = kNaN;  // t - T, negative before extinction
  double tolerance = 0.0;
  bool pass = true;
  bool vacuous = false;
};

struct BoundReport {
  std::vector<BoundEntry> entries;

  std::size_t passed() const;
  std::size_t failed() const;
  bool all_pass() const { return failed() == 0; }
  const BoundEntry& at(const std::string& id) const;  // throws std::out_of_range
};

double bound_tolerance(const RunRecord& record);

BoundReport check_inequalities(const RunRecord& record);

struct HarnackResult {
  double margin = kNaN;  // min over pairs, divided by H_max at the later time
  double worst_t = kNaN;
  double tip_drop = kNaN;  // min over s of (H_tip(s) - max_{t<s} H_tip(t)) / H_max(s)
  double tip_drop_t = kNaN;
};

HarnackResult check_harnack(const RunRecord& record);

// Max over interior snapshots of |dA/dt + 2 pi + (n-1) * integral lambda/kappa|.
double area_identity_residual(const RunRecord& record);

// Per-snapshot residuals (NaN at the two ends).
std::vector<double> area_identity_residuals(const RunRecord& record);

// sup over the upper branch with |x| <= pi/2 - delta of |y - l - log cos x|.
// Throws GeometryError if h < pi/2 - delta.
double edge_grim_gap(const ProfileCurve& curve, double delta = kDefaultEdgeDelta);

// Same metric on an explicit graph sorted by x with its tip at x = 0.
double edge_grim_gap(std::span<const PlanePoint> graph, double delta = kDefaultEdgeDelta);

struct DisplacementFit {
  double C_est = kNaN;
  double stability = kNaN;
};

// Throws InsufficientDataError if the run spans less than R/2.
DisplacementFit fit_displacement_constant(const RunRecord& record);

struct SpeedCheck {
  double margin = kNaN;  // min of H - |cos theta| for t <= -1
  double worst_t = kNaN;
  double strong_margin = kNaN;  // against |cos theta| (1 + (n-1)/(-t)); not gated
};

SpeedCheck check_speed_lower(const RunRecord& record);

struct GraphHeightCheck {
  double margin = kNaN;  // normalized by the right hand side
  double worst_t = kNaN;
};

GraphHeightCheck check_graph_height(const RunRecord& record);

// |T_est - r0^2/(2n)| / (r0^2/(2n)).
double sphere_benchmark(int dimension, double radius, const SolverConfig& config);

}  // namespace pancake
