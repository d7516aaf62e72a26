// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Takes several minutes in a Release build.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "pancake/angenent_oval.hpp"
#include "pancake/harness.hpp"
#include "pancake/solver.hpp"

using namespace pancake;

namespace {

constexpr double kPi = std::numbers::pi;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int failures = 0;

void report(int id, bool pass, const std::string& text) {
  std::printf("%s  %2d  %s\n", pass ? "PASS" : "FAIL", id, text.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

struct TimedRun {
  RunRecord record;
  double seconds = 0.0;
};

TimedRun approximant(int n, double R, std::size_t N) {
  SolverConfig c;
  c.grid_size = N;
  Stopwatch w;
  RunRecord r = run_approximant(n, R, c);
  return {std::move(r), w.seconds()};
}

// Snapshot nearest to t - T_est = -T/2.
double mid_run_gap(const RunRecord& r) {
  const double half = -0.5 * r.lifespan();
  const Diagnostics* best = &r.snapshots.front();
  for (const Diagnostics& d : r.snapshots) {
    if (std::abs(r.relative_time(d) - half) < std::abs(r.relative_time(*best) - half)) best = &d;
  }
  return best->edge_gap;
}

double n1_oracle_error(std::size_t N) {
  SolverConfig c;
  c.grid_size = N;
  c.end_time = -1.0;
  c.area_stop = 1e-12;
  const RunRecord r = evolve({sample_profile(-2.0, N, 1), -2.0, 0}, c);
  const ProfileCurve k = r.curve(r.snapshots.size() - 1);
  double worst = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    const double exact = oval_curvature(k.grid().theta(i), -1.0);
    worst = std::max(worst, std::abs(k.curvature(i) - exact) / exact);
  }
  return worst;
}

std::string failed_ids(const BoundReport& b) {
  std::string s;
  for (const BoundEntry& e : b.entries) {
    if (!e.pass) s += (s.empty() ? "" : ",") + e.id;
  }
  return s.empty() ? "none" : s;
}

}  // namespace

int main() {
  {
    Stopwatch w;
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> ut(-20.0, -0.1), uth(0.0, 2 * kPi);
    double worst = 0.0;
    for (int k = 0; k < 10000; ++k) {
      const double t = ut(rng);
      worst = std::max(worst, std::abs(oval_residual(oval_point(uth(rng), t), t)));
    }
    const double s = w.seconds();
    report(1, worst < 1e-10 && s < 1.0,
           fmt("closed-form consistency: max |cos x - e^t cosh y| = %.2e (< 1e-10) over 1e4 samples, %.3f s (< 1 s)", worst, s));
  }

  {
    Stopwatch w;
    const double e512 = n1_oracle_error(512), e1024 = n1_oracle_error(1024);
    const double s = w.seconds(), ratio = e512 / e1024;
    report(2, e512 < 1e-3 && ratio >= 3.0 && ratio <= 5.0 && s < 30.0,
           fmt("exact n=1 oracle: max rel error %.3e (< 1e-3) at N=512, halving ratio %.3f (in [3, 5]), %.1f s (< 30 s)", e512, ratio, s));
  }

  {
    bool ok = true;
    std::string text = "sphere extinction r0=1 N=256:";
    for (int n : {1, 2, 3}) {
      SolverConfig c;
      c.grid_size = 256;
      Stopwatch w;
      const double err = sphere_benchmark(n, 1.0, c);
      const double s = w.seconds();
      ok = ok && err < 1e-2 && s < 30.0;
      text += fmt(" n=%d rel err %.2e (%.1f s)", n, err, s);
    }
    report(3, ok, text + " (< 1e-2, < 30 s each)");
  }

  const TimedRun r10 = approximant(2, 10.0, 512);
  {
    const double T = r10.record.lifespan();
    const double lo = 10.0 / 4.0 * (1.0 - std::exp(-10.0)), hi = 10.0 + std::log(2.0);
    report(4, T >= 2.49988 && T <= 10.6932 && r10.seconds < 300.0,
           fmt("extinction bracket n=2 R=10 N=512: T_est = %.6f in [%.5f, %.4f], %.1f s (< 300 s)", T, lo, hi, r10.seconds));
  }

  const TimedRun r10f = approximant(2, 10.0, 1024);
  const BoundReport b512 = check_inequalities(r10.record);
  const BoundReport b1024 = check_inequalities(r10f.record);
  {
    bool same = b512.entries.size() == b1024.entries.size();
    for (std::size_t i = 0; same && i < b512.entries.size(); ++i) {
      same = b512.entries[i].id == b1024.entries[i].id && b512.entries[i].pass == b1024.entries[i].pass;
    }
    report(5, b512.all_pass() && same,
           fmt("inequality suite n=2 R=10: N=512 %zu/%zu pass (failed: %s, tol %.2e); N=1024 %zu/%zu pass, verdicts %s",
               b512.passed(), b512.entries.size(), failed_ids(b512).c_str(), bound_tolerance(r10.record),
               b1024.passed(), b1024.entries.size(), same ? "unchanged" : "changed"));
  }

  {
    const double a = area_identity_residual(r10.record), b = area_identity_residual(r10f.record);
    report(6, a < 1e-2 && b < 2.5e-3,
           fmt("area identity: max |dA/dt + 2 pi + (n-1) int lambda/kappa| = %.3e (< 1e-2) at N=512, %.3e (< 2.5e-3) at N=1024", a, b));
  }

  {
    const HarnackResult h = check_harnack(r10.record);
    report(7, h.margin >= -kHarnackTolerance && h.tip_drop >= -kHarnackTolerance,
           fmt("Harnack n=2 R=10 N=512: worst margin/H_max %.3e, tip monotonicity %.3e (both >= -1e-4)", h.margin, h.tip_drop));
  }

  const TimedRun r20 = approximant(2, 20.0, 512);
  const TimedRun r40 = approximant(2, 40.0, 512);
  {
    const double g10 = mid_run_gap(r10.record), g20 = mid_run_gap(r20.record), g40 = mid_run_gap(r40.record);
    // Closed-form oval at t = -10 against sup |arccosh(e^{-t} cos x) - arccosh(e^{-t}) - log cos x|.
    const double t = -10.0, delta = kDefaultEdgeDelta, edge = 0.5 * kPi - delta;
    const auto grid = AngleGrid::shared(512);
    std::vector<PlanePoint> graph;
    for (std::size_t i = grid->north_pole(); i <= grid->south_pole(); ++i) {
      graph.push_back(oval_point(grid->theta(i), t));
    }
    std::sort(graph.begin(), graph.end(), [](auto& a, auto& b) { return a.x < b.x; });
    const double numeric = edge_grim_gap(graph, delta);
    long double analytic = 0;
    const long double top = std::acosh(std::exp(-static_cast<long double>(t)));
    for (int k = 0; k <= 100000; ++k) {
      const long double x = edge * k / 100000.0L;
      const long double y = std::acosh(std::exp(-static_cast<long double>(t)) * std::cos(x));
      analytic = std::max(analytic, std::abs(y - top - std::log(std::cos(x))));
    }
    const double diff = std::abs(numeric - static_cast<double>(analytic));
    report(8, g10 > g20 && g20 > g40 && diff < 1e-3,
           fmt("edge-to-Grim: mid-run gap n=2 N=512 R=10 %.3e > R=20 %.3e > R=40 %.3e; n=1 t=-10 gap %.3e vs analytic %.3e, |diff| %.2e (< 1e-3)",
               g10, g20, g40, numeric, static_cast<double>(analytic), diff));
  }

  {
    const TimedRun n1 = approximant(1, 10.0, 512);
    const DisplacementFit f1 = fit_displacement_constant(n1.record);
    const double c10 = fit_displacement_constant(r10.record).C_est;
    const double c20 = fit_displacement_constant(r20.record).C_est;
    const double c40 = fit_displacement_constant(r40.record).C_est;
    const double d1 = std::abs(c20 - c10), d2 = std::abs(c40 - c20);
    const double err = std::abs(f1.C_est - std::log(2.0));
    report(9, err < 1e-3 && d2 < d1,
           fmt("displacement constant: n=1 C_est %.6f, |C_est - log 2| = %.2e (< 1e-3); n=2 C_est R=10,20,40: %.4f, %.4f, %.4f, |differences| %.4f > %.4f",
               f1.C_est, err, c10, c20, c40, d1, d2));
  }

  {
    bool ok = true;
    std::string text = "Alexandrov:";
    for (double t : {-1.0, -10.0}) {
      const ProfileCurve c = t > -2.0 ? sample_profile(t, 512, 2) : sample_profile_averaged(t, 512, 2);
      const double h = displacements(c).h;
      double last = -1.0;
      text += fmt(" t=%g margins", t);
      for (double f : {0.1, 0.3, 0.5}) {
        const ReflectionResult res = alexandrov_strict(c, f * h);
        ok = ok && res.strict && res.margin > last;
        last = res.margin;
        text += fmt(" %.3e", res.margin);
      }
    }
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> ur(0.5, 3.0), ua(0.05, 0.85);
    double worst = 0.0;
    int agree = 0;
    for (int k = 0; k < 100; ++k) {
      const double r = ur(rng), alpha = ua(rng) * r;
      const ReflectionResult res = alexandrov_strict(round_profile(r, 512, 2), alpha);
      const double exact = 2 * alpha / std::sqrt(r * r - alpha * alpha);
      const double rel = std::abs(res.margin / exact - 1.0);
      worst = std::max(worst, rel);
      if (res.strict && rel < 1e-3) ++agree;
    }
    ok = ok && agree == 100;
    report(10, ok, text + fmt(" (strict, increasing in alpha); circle oracle %d/100 agree, worst rel diff %.2e (< 1e-3)", agree, worst));
  }

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
