#include "pancake_cli/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "pancake/errors.hpp"

namespace pancake::cli {

using nlohmann::json;

namespace {

constexpr int kFormatVersion = 1;

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double get_num(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return kNaN;
  return it->get<double>();
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  return f;
}

void finish(std::ofstream& f, const std::string& path) {
  f.flush();
  if (!f) throw std::runtime_error("write failed: " + path);
}

json config_json(const SolverConfig& c) {
  return {{"N", c.grid_size},
          {"safety", c.safety},
          {"kappa_max_stop", c.kappa_max_stop},
          {"area_stop", c.area_stop},
          {"snapshot_stride", num(c.snapshot_stride)},
          {"snapshot_area_ratio", c.snapshot_area_ratio},
          {"end_time", num(c.end_time)}};
}

SolverConfig config_from(const json& j) {
  SolverConfig c;
  c.grid_size = j.at("N").get<std::size_t>();
  c.safety = j.at("safety").get<double>();
  c.kappa_max_stop = j.at("kappa_max_stop").get<double>();
  c.area_stop = j.at("area_stop").get<double>();
  c.snapshot_stride = get_num(j, "snapshot_stride");
  c.snapshot_area_ratio = j.at("snapshot_area_ratio").get<double>();
  c.end_time = get_num(j, "end_time");
  return c;
}

json run_json(const RunRecord& r) {
  json j = {{"n", r.dimension},
            {"R", num(r.oval_age)},
            {"dt_max", r.dt_max},
            {"termination", std::string(to_string(r.termination))},
            {"snapshots", r.snapshots.size()},
            {"T_est", num(r.extinction_time)},
            {"T_raw", num(r.extinction_raw)},
            {"area_defect", r.area_defect}};
  j.update(config_json(r.config));
  return j;
}

}  // namespace

void write_timeseries(const RunRecord& r, std::ostream& out) {
  const double m = static_cast<double>(r.dimension - 1);
  out << kTimeseriesHeader << '\n';
  for (const Diagnostics& d : r.snapshots) {
    const double t = std::isnan(r.extinction_time) ? d.t : r.relative_time(d);
    const double g = t < 0.0 ? d.l + t - m * std::log(-t) : kNaN;
    out << number(t) << ',' << number(d.h) << ',' << number(d.l) << ',' << number(d.area) << ','
        << number(d.H_min) << ',' << number(d.H_max) << ',' << number(d.kappa_min) << ','
        << number(d.lambda_max) << ',' << number(d.area_identity_residual) << ','
        << number(d.edge_gap) << ',' << number(g) << '\n';
  }
}

void write_timeseries(const RunRecord& r, const std::string& path) {
  auto f = open_out(path);
  write_timeseries(r, f);
  finish(f, path);
}

std::string report_json(const RunRecord& r, const BoundReport& b, const ReportExtras& extras) {
  json bounds = json::array();
  for (const BoundEntry& e : b.entries) {
    json item = {{"id", e.id},
                 {"margin", num(e.margin)},
                 {"worst_t", num(e.worst_t)},
                 {"pass", e.pass},
                 {"tolerance", e.tolerance}};
    if (e.vacuous) item["vacuous"] = true;
    bounds.push_back(item);
  }
  json fits = {{"C_est", nullptr}, {"stability", nullptr}};
  if (extras.fit) fits = {{"C_est", num(extras.fit->C_est)}, {"stability", num(extras.fit->stability)}};
  json j = {{"run", run_json(r)},
            {"bounds", bounds},
            {"fits", fits},
            {"diagnostics",
             {{"area_identity_residual", num(extras.area_identity)},
              {"speed_strong_margin", num(extras.speed_strong_margin)}}},
            {"summary", {{"passed", b.passed()}, {"failed", b.failed()}}}};
  return j.dump(2);
}

void write_report(const RunRecord& r, const BoundReport& b, const ReportExtras& extras,
                  std::ostream& out) {
  out << report_json(r, b, extras) << '\n';
}

void write_report(const RunRecord& r, const BoundReport& b, const ReportExtras& extras,
                  const std::string& path) {
  auto f = open_out(path);
  write_report(r, b, extras, f);
  finish(f, path);
}

std::string record_json(const RunRecord& r) {
  json snaps = json::array();
  for (const Diagnostics& d : r.snapshots) {
    snaps.push_back({{"t", d.t},
                     {"h", d.h},
                     {"l", d.l},
                     {"A", d.area},
                     {"Hmin", d.H_min},
                     {"Hmax", d.H_max},
                     {"kmin", d.kappa_min},
                     {"kmax", d.kappa_max},
                     {"lambdamax", d.lambda_max},
                     {"lambda_over_kappa", d.lambda_over_kappa},
                     {"H_tip", d.H_tip},
                     {"H_pole", d.H_pole},
                     {"area_residual", num(d.area_identity_residual)},
                     {"edge_gap", num(d.edge_gap)},
                     {"harnack", num(d.harnack_margin)},
                     {"step", d.step}});
  }
  json j = {{"format", "pancake-run-record"},
            {"version", kFormatVersion},
            {"n", r.dimension},
            {"R", num(r.oval_age)},
            {"config", config_json(r.config)},
            {"dt_max", r.dt_max},
            {"t_start", r.t_start},
            {"termination", std::string(to_string(r.termination))},
            {"T_est", num(r.extinction_time)},
            {"T_raw", num(r.extinction_raw)},
            {"area_defect", r.area_defect},
            {"snapshots", snaps},
            {"curvatures", r.curvatures}};
  return j.dump();
}

RunRecord record_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    if (j.at("format") != "pancake-run-record" || j.at("version") != kFormatVersion) {
      throw std::runtime_error("not a version 1 run record");
    }
    RunRecord r;
    r.dimension = j.at("n").get<int>();
    r.oval_age = get_num(j, "R");
    r.config = config_from(j.at("config"));
    r.dt_max = j.at("dt_max").get<double>();
    r.t_start = j.at("t_start").get<double>();
    r.termination = termination_from_string(j.at("termination").get<std::string>());
    r.extinction_time = get_num(j, "T_est");
    r.extinction_raw = get_num(j, "T_raw");
    r.area_defect = j.at("area_defect").get<double>();
    for (const json& s : j.at("snapshots")) {
      Diagnostics d;
      d.t = s.at("t").get<double>();
      d.h = s.at("h").get<double>();
      d.l = s.at("l").get<double>();
      d.area = s.at("A").get<double>();
      d.H_min = s.at("Hmin").get<double>();
      d.H_max = s.at("Hmax").get<double>();
      d.kappa_min = s.at("kmin").get<double>();
      d.kappa_max = s.at("kmax").get<double>();
      d.lambda_max = s.at("lambdamax").get<double>();
      d.lambda_over_kappa = s.at("lambda_over_kappa").get<double>();
      d.H_tip = s.at("H_tip").get<double>();
      d.H_pole = s.at("H_pole").get<double>();
      d.area_identity_residual = get_num(s, "area_residual");
      d.edge_gap = get_num(s, "edge_gap");
      d.harnack_margin = get_num(s, "harnack");
      d.step = s.at("step").get<std::int64_t>();
      r.snapshots.push_back(d);
    }
    r.curvatures = j.at("curvatures").get<std::vector<std::vector<double>>>();
    if (r.curvatures.size() != r.snapshots.size()) {
      throw std::runtime_error("snapshot and curvature counts differ");
    }
    return r;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed run record: ") + e.what());
  }
}

void save_record(const RunRecord& r, const std::string& path) {
  auto f = open_out(path);
  f << record_json(r) << '\n';
  finish(f, path);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

RunRecord load_record(const std::string& path) { return record_from_json(read_file(path)); }

}  // namespace pancake::cli
