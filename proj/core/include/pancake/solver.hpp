#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pancake/profile.hpp"
#include "pancake/run_record.hpp"

namespace pancake {

struct FlowState {
  ProfileCurve curve;
  double t = 0.0;
  std::int64_t step_count = 0;
};

using SnapshotObserver = std::function<void(const Diagnostics&)>;

// kappa^2 (H_thth + H) with central differences on H. Throws GeometryError if
// kappa is not positive.
std::vector<double> time_derivative(const ProfileCurve& curve);
std::vector<double> time_derivative(const FlowState& state);

double stable_dt(const FlowState& state, const SolverConfig& config);

// One RK4 step followed by symmetrization. Throws InstabilityError.
FlowState step(const FlowState& state, double dt);

RunRecord evolve(const FlowState& initial, const SolverConfig& config,
                 const SnapshotObserver& observer = {});

// Least-squares line through A(t) over the last 8 snapshots, extrapolated to
// A = 0. Throws InsufficientDataError.
double estimate_extinction(const RunRecord& record);

inline constexpr std::size_t kExtinctionWindow = 8;

}  // namespace pancake
