#include "mdisk/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mdisk {

namespace {

// JSON has no infinities; map non-finite margins to null.
nlohmann::json finite_or_null(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"anchor", c.anchor},
                      {"pass", c.pass},
                      {"asserted", c.asserted},
                      {"margin", finite_or_null(c.margin)},
                      {"tolerance", finite_or_null(c.tolerance)},
                      {"worst_z", {c.worst_z.real(), c.worst_z.imag()}},
                      {"details", c.details}});
  }
  return {{"params", report.params},
          {"grid", report.grid},
          {"config", report.config},
          {"all_asserted_pass", report.all_asserted_pass()},
          {"checks", checks}};
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.params = j.value("params", nlohmann::json::object());
  r.grid = j.value("grid", nlohmann::json::object());
  r.config = j.value("config", nlohmann::json::object());
  for (const auto& c : j.at("checks")) {
    CheckRecord rec;
    rec.name = c.at("name").get<std::string>();
    rec.anchor = c.at("anchor").get<std::string>();
    rec.pass = c.at("pass").get<bool>();
    rec.asserted = c.value("asserted", true);
    rec.margin = c.at("margin").is_null() ? NAN : c.at("margin").get<double>();
    rec.tolerance = c.at("tolerance").is_null() ? NAN : c.at("tolerance").get<double>();
    rec.worst_z = {c.at("worst_z").at(0).get<double>(), c.at("worst_z").at(1).get<double>()};
    rec.details = c.value("details", nlohmann::json::object());
    r.checks.push_back(std::move(rec));
  }
  return r;
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  os << contents;
  if (!os) throw std::runtime_error("failed writing '" + path.string() + "'");
}

void write_report(const VerificationReport& report, const std::filesystem::path& path) {
  write_text_file(path, report_to_json(report).dump(2) + "\n");
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_short_sci(double v) {
  if (v == 0.0 || !std::isfinite(v)) return format_number(v);
  int exponent = static_cast<int>(std::floor(std::log10(std::abs(v))));
  double mantissa = v / std::pow(10.0, exponent);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", mantissa);
  if (std::abs(std::stod(buf)) >= 10.0) {
    ++exponent;
    std::snprintf(buf, sizeof buf, "%.1f", v / std::pow(10.0, exponent));
  }
  return std::string(buf) + "e" + std::to_string(exponent);
}

void write_blowup_csv(const BlowupSweep& sweep, const std::filesystem::path& path,
                      const nlohmann::json& config) {
  std::ostringstream os;
  os << "# config: " << config.dump() << "\n";
  os << "a,j,K_at_bj,delta,sup_off_axis\n";
  for (size_t i = 0; i < sweep.a_values.size(); ++i) {
    const double sup = sweep.off_axis[i].sup_abs_K;
    for (const auto& e : sweep.at_points) {
      if (e.a != sweep.a_values[i]) continue;
      os << format_number(e.a) << ',' << e.j + 1 << ',' << format_number(-e.K_at_point) << ','
         << format_number(sweep.delta) << ',' << format_number(sup) << '\n';
    }
  }
  write_text_file(path, os.str());
}

}  // namespace mdisk
