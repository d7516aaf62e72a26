#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "pancake/harness.hpp"
#include "pancake/run_record.hpp"

namespace pancake::cli {

inline constexpr const char* kTimeseriesHeader =
    "t,h,l,A,Hmin,Hmax,kmin,lambdamax,area_residual,edge_gap,g";

// One row per snapshot, t measured from T_est, 15 significant digits.
void write_timeseries(const RunRecord& record, std::ostream& out);
void write_timeseries(const RunRecord& record, const std::string& path);

struct ReportExtras {
  std::optional<DisplacementFit> fit;
  double area_identity = kNaN;
  double speed_strong_margin = kNaN;
};

std::string report_json(const RunRecord& record, const BoundReport& bounds, const ReportExtras& extras);
void write_report(const RunRecord& record, const BoundReport& bounds, const ReportExtras& extras,
                  std::ostream& out);
void write_report(const RunRecord& record, const BoundReport& bounds, const ReportExtras& extras,
                  const std::string& path);

std::string record_json(const RunRecord& record);
RunRecord record_from_json(const std::string& text);
void save_record(const RunRecord& record, const std::string& path);
RunRecord load_record(const std::string& path);

// Throws std::runtime_error naming the path.
std::string read_file(const std::string& path);

}  // namespace pancake::cli
