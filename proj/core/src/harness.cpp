#include "pancake/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "pancake/angenent_oval.hpp"
#include "pancake/errors.hpp"

namespace pancake {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Running minimum of a normalized margin with the time t - T where it occurred.
struct Worst {
  double margin = kInf;
  double t = kNaN;
  bool seen = false;

  void add(double m, double time) {
    seen = true;
    if (m < margin || std::isnan(m)) {
      margin = m;
      t = time;
    }
  }
};

// lhs <= rhs, normalized by |rhs|; an infinite rhs holds trivially.
double upper_margin(double lhs, double rhs) {
  if (std::isinf(rhs) && rhs > 0.0) return 1.0;
  return (rhs - lhs) / std::abs(rhs);
}

// lhs >= rhs, normalized by |rhs|; a vanishing rhs is met by any positive lhs.
double lower_margin(double lhs, double rhs) {
  if (rhs == 0.0) return lhs >= 0.0 ? 1.0 : -1.0;
  return (lhs - rhs) / std::abs(rhs);
}

double age_factor(const RunRecord& r) {
  return std::isnan(r.oval_age) ? 1.0 : -std::expm1(-r.oval_age);
}

// Curve level quantities of one snapshot.
struct Shape {
  double kappa_minus_lambda = kInf;  // min (kappa - lambda)/kappa
  double kappa_theta = kInf;         // min kappa_theta on (pi/2, pi) / max |kappa_theta|
  double pole_is_min = kInf;
  double tip_is_max = kInf;
  double x_max = 0.0;
};

Shape shape_of(const ProfileCurve& curve, const DerivedFields& f) {
  const AngleGrid& g = curve.grid();
  const std::size_t n = curve.size();
  const auto k = curve.curvature();
  Shape s;
  for (std::size_t i = 0; i < n; ++i) {
    s.kappa_minus_lambda = std::min(s.kappa_minus_lambda, (k[i] - f.lambda[i]) / k[i]);
    s.x_max = std::max(s.x_max, f.x[i]);
  }

  double lowest = kInf, scale = 0.0;
  for (std::size_t i = g.north_pole() + 1; i < g.tip(); ++i) {
    const double d = (k[i + 1] - k[i - 1]) / (2.0 * g.spacing());
    lowest = std::min(lowest, d);
    scale = std::max(scale, std::abs(d));
  }
  s.kappa_theta = scale > 0.0 ? lowest / scale : 0.0;

  double off_pole_min = kInf, off_tip_max = -kInf;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != g.north_pole() && i != g.south_pole()) off_pole_min = std::min(off_pole_min, f.H[i]);
    if (i != g.tip() && i != 0) off_tip_max = std::max(off_tip_max, f.H[i]);
  }
  const double H_pole = f.H[g.north_pole()];
  const double H_tip = f.H[g.tip()];
  s.pole_is_min = (off_pole_min - H_pole) / H_pole;
  s.tip_is_max = (H_tip - off_tip_max) / H_tip;
  return s;
}

BoundEntry finish(const std::string& id, const Worst& w, double tol) {
  BoundEntry e;
  e.id = id;
  e.tolerance = tol;
  if (w.seen) {
    e.margin = w.margin;
    e.worst_t = w.t;
    e.pass = w.margin >= -tol;
  }
  return e;
}

BoundEntry vacuous(const std::string& id, double tol) {
  BoundEntry e;
  e.id = id;
  e.tolerance = tol;
  e.vacuous = true;
  return e;
}

void require_extinction(const RunRecord& r) {
  if (std::isnan(r.extinction_time)) {
    throw InsufficientDataError("run record has no extinction estimate");
  }
}

}  // namespace

RunRecord run_approximant(int dimension, double oval_age, const SolverConfig& config,
                          double edge_delta, const SnapshotObserver& observer) {
  if (!(oval_age > 0.0 && std::isfinite(oval_age))) throw DomainError("oval age R must be positive");
  config.validate();
  FlowState s0{sample_profile_averaged(-oval_age, config.grid_size, dimension), 0.0, 0};
  RunRecord record = evolve(s0, config, observer);
  record.oval_age = oval_age;
  // The sampled polygon misses area where the pole faces are unresolved. The
  // discrete flow dies early by that area over the area rate (exactly so for
  // n = 1, where the rate is 2 pi for both).
  const Diagnostics& first = record.snapshots.front();
  record.area_defect = 2.0 * kPi * oval_age - first.area;
  const double rate = 2.0 * kPi + (dimension - 1) * first.lambda_over_kappa;
  record.extinction_raw = estimate_extinction(record);
  record.extinction_time = record.extinction_raw + record.area_defect / rate;
  annotate(record, edge_delta);
  return record;
}

void annotate(RunRecord& record, double edge_delta) {
  require_extinction(record);
  const auto residuals = area_identity_residuals(record);
  for (std::size_t i = 0; i < record.snapshots.size(); ++i) {
    Diagnostics& d = record.snapshots[i];
    d.area_identity_residual = residuals[i];
    try {
      d.edge_gap = edge_grim_gap(record.curve(i), edge_delta);
    } catch (const GeometryError&) {
      d.edge_gap = kNaN;
    }
  }
  // Harnack margin of each snapshot against every earlier one.
  const auto& s = record.snapshots;
  for (std::size_t j = 0; j < s.size(); ++j) {
    const double tau_s = s[j].t - record.t_start;
    double worst = kInf;
    for (std::size_t i = 0; i < j; ++i) {
      const double tau_t = s[i].t - record.t_start;
      const double m = s[j].H_tip - std::sqrt(tau_t / tau_s) * s[i].H_tip;
      worst = std::min(worst, m / s[j].H_max);
    }
    record.snapshots[j].harnack_margin = j == 0 ? kNaN : worst;
  }
}

std::size_t BoundReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const BoundEntry& e) { return e.pass; }));
}

std::size_t BoundReport::failed() const { return entries.size() - passed(); }

const BoundEntry& BoundReport::at(const std::string& id) const {
  for (const auto& e : entries) {
    if (e.id == id) return e;
  }
  throw std::out_of_range("no bound with id " + id);
}

double bound_tolerance(const RunRecord& record) {
  const double h = record.spacing();
  return 10.0 * (h * h + record.dt_max);
}

BoundReport check_inequalities(const RunRecord& r) {
  require_extinction(r);
  const double tol = bound_tolerance(r);
  const double n = static_cast<double>(r.dimension);
  const double T = r.flow_lifespan();
  const double age = age_factor(r);
  const bool rotational = r.dimension > 1;

  Worst hl_lower, hl_upper, Hmin_circle, h_lower, l_upper, Hmax_upper, area_lower, area_upper,
      area_hl_lower, area_hl_upper, l_gt_h, kappa_ge_lambda, lambda_decay, kappa_theta,
      Hmin_at_pole, Hmax_at_tip, Hmin_decay, h_ancient, slab, area_identity;

  for (std::size_t i = 0; i < r.snapshots.size(); ++i) {
    const Diagnostics& d = r.snapshots[i];
    const double t = r.flow_time(d);
    if (!(t < 0.0)) continue;
    const ProfileCurve curve = r.curve(i);
    const DerivedFields f = derive(curve);
    const Shape s = shape_of(curve, f);
    const double hl = d.h * d.l;

    hl_lower.add(lower_margin(hl, -0.5 * kPi * t), t);
    hl_upper.add(upper_margin(hl, -n * kPi * t), t);
    Hmin_circle.add(upper_margin(d.H_min, 2.0 * n * d.h / (d.l * d.l + d.h * d.h)), t);
    h_lower.add(lower_margin(d.h, 0.5 * kPi * age * std::exp(2.0 * n / t)), t);
    l_upper.add(upper_margin(d.l, -2.0 * n * std::exp(-2.0 * n / t) * t / age), t);
    if (t >= -0.5 * T) {
      Hmax_upper.add(upper_margin(d.H_max, 2.0 * n * std::numbers::sqrt2 * std::exp(-2.0 * n / t) / age), t);
    }
    area_lower.add(lower_margin(d.area, -2.0 * kPi * t), t);
    area_upper.add(upper_margin(d.area, -2.0 * n * kPi * t), t);
    area_hl_lower.add(lower_margin(d.area, 2.0 * hl), t);
    area_hl_upper.add(upper_margin(d.area, 4.0 * hl), t);
    l_gt_h.add(lower_margin(d.l, d.h), t);
    if (rotational) {
      kappa_ge_lambda.add(s.kappa_minus_lambda, t);
      if (t <= -1.0) lambda_decay.add(upper_margin(d.lambda_max, 1.0 / -t), t);
    }
    kappa_theta.add(s.kappa_theta, t);
    Hmin_at_pole.add(s.pole_is_min, t);
    Hmax_at_tip.add(s.tip_is_max, t);
    Hmin_decay.add(upper_margin(d.H_min, n * kPi / (t * t)), t);
    h_ancient.add(lower_margin(d.h, 0.5 * kPi * std::exp(2.0 * n / t)), t);
    slab.add(upper_margin(s.x_max, 0.5 * kPi), t);
    if (!std::isnan(d.area_identity_residual)) {
      const double rate = 2.0 * kPi + (n - 1.0) * d.lambda_over_kappa;
      area_identity.add(-std::abs(d.area_identity_residual) / rate, t);
    }
  }

  BoundReport report;
  auto& e = report.entries;
  e.push_back(finish("hl_lower", hl_lower, tol));
  e.push_back(finish("hl_upper", hl_upper, tol));
  e.push_back(finish("Hmin_circle", Hmin_circle, tol));
  e.push_back(finish("h_lower", h_lower, tol));
  e.push_back(finish("l_upper", l_upper, tol));
  e.push_back(finish("Hmax_upper", Hmax_upper, tol));
  e.push_back(finish("area_lower", area_lower, tol));
  e.push_back(finish("area_upper", area_upper, tol));
  e.push_back(finish("area_hl_lower", area_hl_lower, tol));
  e.push_back(finish("area_hl_upper", area_hl_upper, tol));
  e.push_back(finish("l_gt_h", l_gt_h, tol));
  e.push_back(rotational ? finish("kappa_ge_lambda", kappa_ge_lambda, tol)
                         : vacuous("kappa_ge_lambda", tol));
  e.push_back(rotational ? finish("lambda_decay", lambda_decay, tol)
                         : vacuous("lambda_decay", tol));
  e.push_back(finish("kappa_theta_positive", kappa_theta, tol));
  e.push_back(finish("Hmin_at_pole", Hmin_at_pole, tol));
  e.push_back(finish("Hmax_at_tip", Hmax_at_tip, tol));
  e.push_back(finish("Hmin_decay", Hmin_decay, tol));
  e.push_back(finish("h_lower_ancient", h_ancient, tol));
  e.push_back(finish("slab", slab, tol));
  e.push_back(finish("area_identity", area_identity, tol));

  const SpeedCheck speed = check_speed_lower(r);
  Worst sw;
  if (!std::isnan(speed.margin)) sw.add(speed.margin, speed.worst_t);
  e.push_back(finish("speed_lower", sw, tol));

  const GraphHeightCheck graph = check_graph_height(r);
  Worst gw;
  if (!std::isnan(graph.margin)) gw.add(graph.margin, graph.worst_t);
  e.push_back(finish("graph_height", gw, tol));

  const HarnackResult harnack = check_harnack(r);
  Worst hw, mw;
  if (!std::isnan(harnack.margin)) hw.add(harnack.margin, harnack.worst_t);
  if (!std::isnan(harnack.tip_drop)) mw.add(harnack.tip_drop, harnack.tip_drop_t);
  e.push_back(finish("harnack", hw, kHarnackTolerance));
  e.push_back(finish("tip_monotone", mw, kHarnackTolerance));
  return report;
}

HarnackResult check_harnack(const RunRecord& r) {
  require_extinction(r);
  const auto& s = r.snapshots;
  HarnackResult out;
  Worst pairs, drop;
  double running_max = -kInf;
  for (std::size_t j = 0; j < s.size(); ++j) {
    const double tau_s = s[j].t - r.t_start;
    for (std::size_t i = 0; i < j; ++i) {
      const double tau_t = s[i].t - r.t_start;
      const double m = s[j].H_tip - std::sqrt(tau_t / tau_s) * s[i].H_tip;
      pairs.add(m / s[j].H_max, r.flow_time(s[j]));
    }
    if (j > 0) drop.add((s[j].H_tip - running_max) / s[j].H_max, r.flow_time(s[j]));
    running_max = std::max(running_max, s[j].H_tip);
  }
  if (pairs.seen) {
    out.margin = pairs.margin;
    out.worst_t = pairs.t;
  }
  if (drop.seen) {
    out.tip_drop = std::min(drop.margin, 0.0);
    out.tip_drop_t = drop.t;
  }
  return out;
}

std::vector<double> area_identity_residuals(const RunRecord& r) {
  const auto& s = r.snapshots;
  std::vector<double> out(s.size(), kNaN);
  const double m = static_cast<double>(r.dimension - 1);
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    // three point derivative on a non-uniform stencil
    const double hm = s[i].t - s[i - 1].t;
    const double hp = s[i + 1].t - s[i].t;
    const double dA = (hm * hm * s[i + 1].area - hp * hp * s[i - 1].area +
                       (hp * hp - hm * hm) * s[i].area) /
                      (hm * hp * (hm + hp));
    out[i] = dA + 2.0 * kPi + m * s[i].lambda_over_kappa;
  }
  return out;
}

double area_identity_residual(const RunRecord& r) {
  if (r.snapshots.size() < 3) throw InsufficientDataError("area identity needs 3 snapshots");
  double worst = 0.0;
  for (double v : area_identity_residuals(r)) {
    if (!std::isnan(v)) worst = std::max(worst, std::abs(v));
  }
  return worst;
}

double edge_grim_gap(const ProfileCurve& curve, double delta) {
  const Coordinates coords = reconstruct(curve);
  const double h = displacements(curve, coords).h;
  if (h < 0.5 * kPi - delta) {
    throw GeometryError("profile narrower than the edge window");
  }
  const auto graph = upper_branch(curve, coords);
  return edge_grim_gap(graph, delta);
}

double edge_grim_gap(std::span<const PlanePoint> graph, double delta) {
  if (!(delta > 0.0 && delta < 0.25 * kPi)) throw DomainError("edge window delta must lie in (0, pi/4)");
  const double y0 = graph_height(graph, 0.0);
  const double edge = 0.5 * kPi - delta;
  double gap = 0.0;
  bool any = false;
  for (const PlanePoint& p : graph) {
    if (std::abs(p.x) > edge) continue;
    any = true;
    gap = std::max(gap, std::abs(p.y - y0 - std::log(std::cos(p.x))));
  }
  if (!any) throw GeometryError("no graph points inside the edge window");
  return gap;
}

DisplacementFit fit_displacement_constant(const RunRecord& r) {
  require_extinction(r);
  const double T = r.lifespan();
  const double need = std::isnan(r.oval_age) ? 0.0 : 0.5 * r.oval_age;
  if (!(T > 0.0) || T < need) throw InsufficientDataError("run span shorter than R/2");
  const double m = static_cast<double>(r.dimension - 1);
  double sum1 = 0.0, sum2 = 0.0;
  std::size_t n1 = 0, n2 = 0;
  for (const Diagnostics& d : r.snapshots) {
    const double t = r.relative_time(d);
    if (t < -T) continue;
    const double g = d.l + t - m * std::log(-t);
    if (t <= -0.75 * T) {
      sum1 += g;
      ++n1;
    } else if (t <= -0.5 * T) {
      sum2 += g;
      ++n2;
    }
  }
  if (n1 == 0 || n2 == 0) throw InsufficientDataError("fit windows contain no snapshots");
  const double mean1 = sum1 / static_cast<double>(n1);
  const double mean2 = sum2 / static_cast<double>(n2);
  return {mean2, std::abs(mean1 - mean2)};
}

SpeedCheck check_speed_lower(const RunRecord& r) {
  require_extinction(r);
  Worst weak, strong;
  const double m = static_cast<double>(r.dimension - 1);
  for (std::size_t i = 0; i < r.snapshots.size(); ++i) {
    const double t = r.flow_time(r.snapshots[i]);
    if (t > -1.0) continue;
    const ProfileCurve curve = r.curve(i);
    const auto H = mean_curvature(curve);
    const AngleGrid& g = curve.grid();
    double w = kInf, s = kInf;
    for (std::size_t j = 0; j < H.size(); ++j) {
      const double c = std::abs(g.cos(j));
      w = std::min(w, H[j] - c);
      s = std::min(s, H[j] - c * (1.0 + m / -t));
    }
    weak.add(w, t);
    strong.add(s, t);
  }
  SpeedCheck out;
  if (weak.seen) {
    out.margin = weak.margin;
    out.worst_t = weak.t;
    out.strong_margin = strong.margin;
  }
  return out;
}

GraphHeightCheck check_graph_height(const RunRecord& r) {
  require_extinction(r);
  const double n = static_cast<double>(r.dimension);
  Worst worst;
  for (std::size_t i = 0; i < r.snapshots.size(); ++i) {
    const double t = r.flow_time(r.snapshots[i]);
    if (!(t < 0.0)) continue;
    const ProfileCurve curve = r.curve(i);
    const auto graph = upper_branch(curve, reconstruct(curve));
    for (const PlanePoint& p : graph) {
      if (p.x < 0.0) continue;
      const double shift = n * kPi / (0.5 * kPi - p.x);
      if (shift > -0.5 * t) continue;
      const double rhs = -t - shift;
      worst.add((p.y - rhs) / rhs, t);
    }
  }
  GraphHeightCheck out;
  if (worst.seen) {
    out.margin = worst.margin;
    out.worst_t = worst.t;
  }
  return out;
}

double sphere_benchmark(int dimension, double radius, const SolverConfig& config) {
  config.validate();
  FlowState s0{round_profile(radius, config.grid_size, dimension), 0.0, 0};
  const RunRecord record = evolve(s0, config);
  const double T = estimate_extinction(record);
  const double exact = radius * radius / (2.0 * dimension);
  return std::abs(T - exact) / exact;
}

}  // namespace pancake
