#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "pancake/harness.hpp"
#include "pancake/run_record.hpp"

namespace pancake::cli {

enum class Command { oval, run, verify, fit, benchmark };

struct CliConfig {
  Command command = Command::run;
  int n = 2;
  double R = 10.0;
  double t = -1.0;        // oval
  double radius = 1.0;    // benchmark
  SolverConfig solver;
  double delta = kDefaultEdgeDelta;
  std::string output;     // empty: default file in the output dir, or stdout
  std::string record;     // run: where to save the record
  std::string input;      // verify/fit: record to load instead of running
};

// Parse failure or --help. `code` is the process exit code to use.
class CliExit : public std::runtime_error {
 public:
  CliExit(const std::string& message, int code) : std::runtime_error(message), code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

inline constexpr const char* kOutputDirEnv = "PANCAKE_OUTPUT_DIR";

// Flags override values from --config (key=value lines). Throws CliExit.
CliConfig parse_config(const std::vector<std::string>& args);

// Empty path and "-" mean stdout unless the output directory variable is set,
// in which case an empty path becomes <dir>/<fallback>. Relative paths are
// placed under that directory too. Returns an empty path for stdout.
std::filesystem::path resolve_output(const std::string& path, const std::string& fallback);

}  // namespace pancake::cli
