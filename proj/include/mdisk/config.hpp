#pragma once

#include "mdisk/domain.hpp"
#include "mdisk/params.hpp"
#include "mdisk/quadrature.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace mdisk {

/// Everything a CLI run needs. JSON keys mirror the command-line flags.
struct RunConfig {
  std::vector<double> points;
  double a = 0.1;
  bool helicoid = false;
  std::array<double, 3> helicoid_rect = {-1.0, 1.0, 1.0};  // x_lo, x_hi, half-width
  GridSpec grid;
  QuadratureConfig quad;
  std::vector<double> a_list = {0.2, 0.1, 0.05, 0.025, 0.0125};
  double delta = 0.1;
  bool clip = false;
  SplitRule split = SplitRule::kMidpoint;
  bool binary_ply = false;
  bool r0_vs_n = false;
  int n_max = 4;
  std::string out;
  std::string report;
  bool inject_fault = false;

  /// Throws std::invalid_argument on any inconsistency.
  void validate() const;
  ConstructionParams construction() const;
  DomainSpec helicoid_domain() const;

  nlohmann::json to_json() const;
  /// Overlays the keys present in `j` onto this config.
  void merge_json(const nlohmann::json& j);
};

RunConfig load_config_file(const std::string& path);

}  // namespace mdisk
