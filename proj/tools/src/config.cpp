#include "pancake_cli/config.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <sstream>

#include "pancake/errors.hpp"

namespace pancake::cli {

namespace {

const CLI::Validator kGridSize(
    [](std::string& value) -> std::string {
      const long n = std::stol(value);
      if (n < 16 || n % 4 != 0) return "grid size must be >= 16 and divisible by 4";
      return {};
    },
    "N%4==0");

}  // namespace

CliConfig parse_config(const std::vector<std::string>& args) {
  CliConfig cfg;
  CLI::App app{"Pancake ancient solution: Angenent oval approximants and bound checks", "pancake"};
  app.set_config("--config", "", "key=value file; flags override it");
  app.fallthrough();
  app.require_subcommand(1, 1);

  app.add_option("--n", cfg.n, "hypersurface dimension")->check(CLI::Range(1, 64));
  app.add_option("--R", cfg.R, "oval age: initial data is the oval at t = -R")
      ->check(CLI::PositiveNumber);
  app.add_option("--N", cfg.solver.grid_size, "turning-angle grid size")->check(kGridSize);
  app.add_option("--safety", cfg.solver.safety, "CFL fraction")->check(CLI::Range(1e-6, 0.5));
  app.add_option("--kappa-max", cfg.solver.kappa_max_stop, "curvature stop")
      ->check(CLI::PositiveNumber);
  app.add_option("--area-stop", cfg.solver.area_stop, "area stop")->check(CLI::PositiveNumber);
  app.add_option("--stride", cfg.solver.snapshot_stride, "time between snapshots (0: every step)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--area-ratio", cfg.solver.snapshot_area_ratio,
                 "extra snapshot when A drops by this factor (0: off)")
      ->check(CLI::Range(0.0, 0.999999));
  app.add_option("--delta", cfg.delta, "edge window: |x| <= pi/2 - delta")
      ->check(CLI::Range(1e-6, 0.785398));
  app.add_option("--t", cfg.t, "oval time (oval subcommand)")->check(CLI::Range(-1e6, -1e-12));
  app.add_option("--r0", cfg.radius, "sphere radius (benchmark subcommand)")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.output, "output file; '-' for stdout");
  app.add_option("--record", cfg.record, "run: also save the full run record (JSON)");
  app.add_option("--input", cfg.input, "verify/fit: load a saved run record instead of running")
      ->check(CLI::ExistingFile);

  struct Sub {
    const char* name;
    const char* help;
    Command command;
  };
  const Sub subs[] = {
      {"oval", "dump theta, kappa, x, y, residual of the oval at --t", Command::oval},
      {"run", "evolve an approximant and write the time series CSV", Command::run},
      {"verify", "check every gated bound; exit 0 iff all pass", Command::verify},
      {"fit", "fit the displacement constant C", Command::fit},
      {"benchmark", "shrinking sphere extinction benchmark", Command::benchmark},
  };
  for (const Sub& s : subs) {
    app.add_subcommand(s.name, s.help)->fallthrough()->callback(
        [&cfg, c = s.command] { cfg.command = c; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    cfg.solver.validate();
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    throw CliExit(out.str() + err.str(), code);
  } catch (const DomainError& e) {
    throw CliExit(std::string("invalid configuration: ") + e.what(), 2);
  }
  return cfg;
}

std::filesystem::path resolve_output(const std::string& path, const std::string& fallback) {
  const char* dir = std::getenv(kOutputDirEnv);
  const bool has_dir = dir != nullptr && *dir != '\0';
  if (path == "-") return {};
  if (path.empty()) {
    if (!has_dir) return {};
    return std::filesystem::path(dir) / fallback;
  }
  std::filesystem::path p(path);
  if (has_dir && p.is_relative()) return std::filesystem::path(dir) / p;
  return p;
}

}  // namespace pancake::cli
