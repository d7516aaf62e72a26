#include "pancake_cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numbers>

#include "pancake/angenent_oval.hpp"
#include "pancake/errors.hpp"
#include "pancake/grid.hpp"
#include "pancake/harness.hpp"
#include "pancake_cli/serialize.hpp"

namespace pancake::cli {

namespace {

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

nlohmann::json num(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

// Writes through `write` to the resolved path, or to `out` for stdout.
template <class F>
void emit(const CliConfig& cfg, const std::string& fallback, std::ostream& out, F&& write) {
  const auto path = resolve_output(cfg.output, fallback);
  if (path.empty()) {
    write(out);
    return;
  }
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write(f);
  f.flush();
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

RunRecord obtain_record(const CliConfig& cfg) {
  if (!cfg.input.empty()) return load_record(cfg.input);
  return run_approximant(cfg.n, cfg.R, cfg.solver, cfg.delta);
}

int oval(const CliConfig& cfg, std::ostream& out) {
  const auto grid_ptr = AngleGrid::shared(cfg.solver.grid_size);
  const AngleGrid& grid = *grid_ptr;
  emit(cfg, "oval.csv", out, [&](std::ostream& o) {
    o << "theta,kappa,x,y,residual\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double th = grid.theta(i);
      const PlanePoint p = oval_point(th, cfg.t);
      o << number(th) << ',' << number(oval_curvature(th, cfg.t)) << ',' << number(p.x) << ','
        << number(p.y) << ',' << number(oval_residual(p, cfg.t)) << '\n';
    }
  });
  return 0;
}

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const RunRecord r = run_approximant(cfg.n, cfg.R, cfg.solver, cfg.delta);
  emit(cfg, "timeseries.csv", out, [&](std::ostream& o) { write_timeseries(r, o); });
  if (!cfg.record.empty()) {
    const auto path = resolve_output(cfg.record, "record.json");
    save_record(r, path.empty() ? cfg.record : path.string());
  }
  err << "T_est " << number(r.extinction_time) << "  snapshots " << r.snapshots.size()
      << "  termination " << to_string(r.termination) << '\n';
  return 0;
}

int verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const RunRecord r = obtain_record(cfg);
  const BoundReport bounds = check_inequalities(r);
  ReportExtras extras;
  extras.area_identity = area_identity_residual(r);
  extras.speed_strong_margin = check_speed_lower(r).strong_margin;
  try {
    extras.fit = fit_displacement_constant(r);
  } catch (const InsufficientDataError&) {
  }
  emit(cfg, "report.json", out, [&](std::ostream& o) { write_report(r, bounds, extras, o); });
  for (const BoundEntry& e : bounds.entries) {
    if (!e.pass) err << "FAIL " << e.id << " margin " << number(e.margin) << " at t " << number(e.worst_t) << '\n';
  }
  err << bounds.passed() << " passed, " << bounds.failed() << " failed\n";
  return bounds.all_pass() ? 0 : 1;
}

int fit(const CliConfig& cfg, std::ostream& out) {
  const RunRecord r = obtain_record(cfg);
  const DisplacementFit f = fit_displacement_constant(r);
  const nlohmann::json j = {{"n", r.dimension},
                            {"R", num(r.oval_age)},
                            {"T_est", num(r.extinction_time)},
                            {"C_est", num(f.C_est)},
                            {"stability", num(f.stability)}};
  emit(cfg, "fit.json", out, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
  return 0;
}

int benchmark(const CliConfig& cfg, std::ostream& out) {
  const double err = sphere_benchmark(cfg.n, cfg.radius, cfg.solver);
  const double target = cfg.radius * cfg.radius / (2.0 * cfg.n);
  const nlohmann::json j = {{"n", cfg.n},
                            {"r0", cfg.radius},
                            {"N", cfg.solver.grid_size},
                            {"T_exact", target},
                            {"relative_error", err},
                            {"pass", err < 1e-2}};
  emit(cfg, "benchmark.json", out, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
  return err < 1e-2 ? 0 : 1;
}

}  // namespace

int execute(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::oval: return oval(cfg, out);
      case Command::run: return run(cfg, out, err);
      case Command::verify: return verify(cfg, out, err);
      case Command::fit: return fit(cfg, out);
      case Command::benchmark: return benchmark(cfg, out);
    }
  } catch (const InstabilityError& e) {
    err << "error: " << e.what() << " (t = " << e.time() << ")\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}

}  // namespace pancake::cli
