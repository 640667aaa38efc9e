#pragma once

#include "mdisk/geometry.hpp"
#include "mdisk/verify.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace mdisk {

/// {params, grid, config, checks: [{name, anchor, pass, asserted, margin,
/// tolerance, worst_z, details}]}. Keys are emitted in sorted order.
nlohmann::json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

void write_report(const VerificationReport& report, const std::filesystem::path& path);

/// Shortest round-trip decimal form; used for every CSV cell.
std::string format_number(double v);
/// "-1.0e4" style: one decimal in the mantissa, bare exponent.
std::string format_short_sci(double v);

/// Columns (a, j, K_at_bj, delta, sup_off_axis), j one-based.
void write_blowup_csv(const BlowupSweep& sweep, const std::filesystem::path& path,
                      const nlohmann::json& config);

void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace mdisk
