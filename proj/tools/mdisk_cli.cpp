// mdisk: generate meshes, verify, and sweep the pinched minimal-disk family.

#include "mdisk/config.hpp"
#include "mdisk/geometry.hpp"
#include "mdisk/mesh.hpp"
#include "mdisk/report.hpp"
#include "mdisk/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace fs = std::filesystem;
using namespace mdisk;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct StageError : std::runtime_error {
  StageError(const std::string& stage, const std::string& what)
      : std::runtime_error(stage + ": " + what) {}
};

template <class Fn>
auto stage(const std::string& name, Fn&& fn) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError(flag, "not a number: '" + item + "'");
    }
  }
  return out;
}

struct Flags {
  std::string config_path, points, a_list, helicoid_rect, split;
  double a = 0, tol = 0, delta = 0;
  int nx = 0, ny = 0, max_depth = 0, n_max = 0;
  bool helicoid = false, clip = false, binary_ply = false, r0_vs_n = false, inject_fault = false;
  std::string out, report;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config_path, "JSON config; flags override its values");
  cmd->add_option("--points", f.points, "blowup heights, comma separated (e.g. --points=-0.2,0.2)");
  cmd->add_option("--a", f.a, "pinch parameter in (0, 1/2)");
  cmd->add_option("--a-list", f.a_list, "strictly decreasing comma list of a");
  cmd->add_option("--nx", f.nx, "x-columns per piece");
  cmd->add_option("--ny", f.ny, "points per column (odd)");
  cmd->add_option("--tol", f.tol, "quadrature absolute tolerance");
  cmd->add_option("--max-depth", f.max_depth, "quadrature bisection depth");
  cmd->add_option("--delta", f.delta, "off-axis margin around each b_j");
  cmd->add_flag("--clip", f.clip, "clip the mesh to the ball of radius min(r0/2, 1/4)");
  cmd->add_flag("--helicoid", f.helicoid, "use h(z) = z on a rectangle");
  cmd->add_option("--helicoid-rect", f.helicoid_rect, "x_lo,x_hi,half_width for helicoid mode");
  cmd->add_option("--split", f.split, "midpoint | literal");
  cmd->add_flag("--binary-ply", f.binary_ply, "write binary little-endian PLY");
  cmd->add_option("--out", f.out, "mesh path (generate) or output directory (sweep)");
  cmd->add_option("--report", f.report, "verification report path");
  cmd->add_flag("--inject-fault", f.inject_fault)->group("");
}

RunConfig resolve(CLI::App* cmd, const Flags& f) {
  RunConfig cfg;
  if (!f.config_path.empty()) cfg = load_config_file(f.config_path);
  auto given = [&](const char* name) {
    const CLI::Option* opt = cmd->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--points")) cfg.points = parse_list(f.points, "--points");
  if (given("--a")) cfg.a = f.a;
  if (given("--a-list")) cfg.a_list = parse_list(f.a_list, "--a-list");
  if (given("--nx")) cfg.grid.nx = f.nx;
  if (given("--ny")) cfg.grid.ny = f.ny;
  if (given("--tol")) cfg.quad.abs_tol = f.tol;
  if (given("--max-depth")) cfg.quad.max_depth = f.max_depth;
  if (given("--delta")) cfg.delta = f.delta;
  if (given("--clip")) cfg.clip = f.clip;
  if (given("--helicoid")) cfg.helicoid = f.helicoid;
  if (given("--helicoid-rect")) {
    const auto r = parse_list(f.helicoid_rect, "--helicoid-rect");
    if (r.size() != 3) throw CLI::ValidationError("--helicoid-rect", "expects x_lo,x_hi,half_width");
    cfg.helicoid_rect = {r[0], r[1], r[2]};
  }
  if (given("--split")) cfg.merge_json({{"split", f.split}});
  if (given("--binary-ply")) cfg.binary_ply = f.binary_ply;
  if (given("--out")) cfg.out = f.out;
  if (given("--report")) cfg.report = f.report;
  if (given("--r0-vs-n")) cfg.r0_vs_n = f.r0_vs_n;
  if (given("--n-max")) cfg.n_max = f.n_max;
  cfg.inject_fault = f.inject_fault;
  return cfg;
}

Immersion make_immersion(const RunConfig& cfg) {
  if (cfg.helicoid) return make_helicoid_immersion(cfg.helicoid_domain(), cfg.quad);
  FaultInjection fault;
  if (cfg.inject_fault) fault.height_drift = 1e-3;
  return make_family_immersion(cfg.construction(), cfg.quad, cfg.split, fault);
}

int cmd_generate(const RunConfig& cfg) {
  const Immersion imm = stage("config", [&] { return make_immersion(cfg); });
  std::optional<double> r0;
  MeshOptions options;
  if (cfg.clip) {
    r0 = stage("separation", [&] { return check_separation(imm, cfg.grid).r0_estimate; });
    options.clip_radius = presentation_radius(*r0);
  }
  SurfaceMesh mesh = stage("mesh", [&] { return build_mesh(imm, cfg.grid, options); });
  mesh.provenance["config"] = cfg.to_json();
  const fs::path out = cfg.out.empty() ? fs::path("surface.obj") : fs::path(cfg.out);
  stage("write", [&] {
    write_mesh(mesh, mesh_format_for(out, cfg.binary_ply), out);
    return 0;
  });

  std::cout << "wrote " << out.string() << "\n";
  std::cout << "vertices = " << mesh.vertices.size() << "\n";
  std::cout << "triangles = " << mesh.triangles.size() << "\n";
  if (r0) std::cout << "r0_estimate = " << format_number(*r0) << "\n";
  if (cfg.helicoid) {
    std::cout << "K(axis) = " << format_short_sci(gauss_curvature(imm.field(), 0.0).K) << "\n";
  } else {
    const auto params = cfg.construction();
    for (int j = 0; j < params.n(); ++j) {
      std::cout << "K(b_" << j + 1 << ") = "
                << format_short_sci(gauss_curvature(imm.field(), params.point(j)).K) << "\n";
    }
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg, bool a_list_given) {
  VerifyOptions options;
  options.grid = cfg.grid;
  options.quad = cfg.quad;
  options.split = cfg.split;
  options.delta = cfg.delta;
  if (cfg.inject_fault) options.fault.height_drift = 1e-3;
  if (a_list_given) options.a_sweep = cfg.a_list;

  VerificationReport report = stage("verify", [&] {
    return cfg.helicoid ? run_helicoid_verification(cfg.helicoid_domain(), options)
                        : run_verification(cfg.construction(), options);
  });
  report.config = cfg.to_json();
  const fs::path path = cfg.report.empty() ? fs::path("report.json") : fs::path(cfg.report);
  stage("write", [&] {
    write_report(report, path);
    return 0;
  });

  for (const auto& c : report.checks) {
    std::printf("%-16s %-5s %s margin=%s\n", c.name.c_str(), c.pass ? "PASS" : "FAIL",
                c.asserted ? "asserted" : "measured", format_number(c.margin).c_str());
    if (c.name == "separation" && c.details.contains("r0_per_piece")) {
      std::printf("%-16s r0_per_piece=%s\n", "", c.details["r0_per_piece"].dump().c_str());
    }
  }
  std::cout << "report: " << path.string() << "\n";
  return report.all_asserted_pass() ? 0 : kExitFailure;
}

int cmd_sweep(const RunConfig& cfg) {
  const fs::path dir = cfg.out.empty() ? fs::path(".") : fs::path(cfg.out);
  fs::create_directories(dir);
  const nlohmann::json config = cfg.to_json();
  const std::string header = "# config: " + config.dump() + "\n";

  if (!cfg.points.empty()) {
    const BlowupSweep sweep =
        stage("blowup", [&] { return blowup_sweep(cfg.points, cfg.a_list, cfg.delta); });
    write_blowup_csv(sweep, dir / "blowup.csv", config);
    for (int j = 0; j < static_cast<int>(cfg.points.size()); ++j) {
      std::cout << "slope log|K(b_" << j + 1 << ")| vs log(1/a) = " << format_number(sweep.slope(j))
                << "\n";
    }
    if (sweep.a_values.size() >= 2) {
      std::cout << "off-axis sup variation (two smallest a) = "
                << format_number(sweep.off_axis_variation()) << "\n";
    }

    if (cfg.a_list.size() >= 3) {
      std::vector<ConstructionParams> family;
      for (double a : cfg.a_list) family.emplace_back(cfg.points, a);
      const auto conv = stage("convergence", [&] { return check_convergence(family, cfg.delta); });
      std::ostringstream os;
      os << header << "a_prev,a_next,diff_F,diff_D1_scaled,diff_D2_scaled\n";
      for (size_t i = 0; i < conv.diff_F.size(); ++i) {
        os << format_number(conv.a_values[i]) << ',' << format_number(conv.a_values[i + 1]) << ','
           << format_number(conv.diff_F[i]) << ',' << format_number(conv.diff_D1[i]) << ','
           << format_number(conv.diff_D2[i]) << '\n';
      }
      write_text_file(dir / "convergence.csv", os.str());
      std::cout << "convergence: " << (conv.record.pass ? "PASS" : "FAIL") << "\n";
    }

    std::ostringstream os;
    os << header << "a,r0\n";
    for (double a : cfg.a_list) {
      const double r0 = stage("separation", [&] {
        return check_separation(make_family_immersion({cfg.points, a}, cfg.quad, cfg.split), cfg.grid)
            .r0_estimate;
      });
      os << format_number(a) << ',' << format_number(r0) << '\n';
    }
    write_text_file(dir / "r0_vs_a.csv", os.str());
  }

  if (cfg.r0_vs_n) {
    std::ostringstream os;
    os << header << "n,a,r0\n";
    for (int n = 1; n <= cfg.n_max; ++n) {
      const auto params = ConstructionParams::evenly_spaced(n, cfg.a);
      const double r0 = stage("separation", [&] {
        return check_separation(make_family_immersion(params, cfg.quad), cfg.grid).r0_estimate;
      });
      os << n << ',' << format_number(cfg.a) << ',' << format_number(r0) << '\n';
      std::cout << "r0(n=" << n << ") = " << format_number(r0) << "\n";
    }
    write_text_file(dir / "r0_vs_n.csv", os.str());
  }
  std::cout << "wrote CSV files to " << dir.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pinched minimal disks with prescribed curvature blowup"};
  app.require_subcommand(1);
  Flags gen_flags, ver_flags, swp_flags;
  auto* gen = app.add_subcommand("generate", "build and write a surface mesh");
  auto* ver = app.add_subcommand("verify", "run every check and write a JSON report");
  auto* swp = app.add_subcommand("sweep", "tabulate curvature, convergence and r0 over a");
  add_common(gen, gen_flags);
  add_common(ver, ver_flags);
  add_common(swp, swp_flags);
  swp->add_flag("--r0-vs-n", swp_flags.r0_vs_n, "tabulate r0 for n = 1..n-max evenly spaced points");
  swp->add_option("--n-max", swp_flags.n_max, "largest n for --r0-vs-n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      const RunConfig cfg = resolve(gen, gen_flags);
      if (!cfg.helicoid && cfg.points.empty()) {
        std::cerr << "usage error: generate needs --points or --helicoid\n" << gen->help();
        return kExitUsage;
      }
      stage("config", [&] {
        cfg.validate();
        return 0;
      });
      return cmd_generate(cfg);
    }
    if (ver->parsed()) {
      const RunConfig cfg = resolve(ver, ver_flags);
      if (!cfg.helicoid && cfg.points.empty()) {
        std::cerr << "usage error: verify needs --points or --helicoid\n" << ver->help();
        return kExitUsage;
      }
      stage("config", [&] {
        cfg.validate();
        return 0;
      });
      bool a_list_given = ver->count("--a-list") > 0;
      if (!ver_flags.config_path.empty()) {
        std::ifstream is(ver_flags.config_path);
        a_list_given = a_list_given || nlohmann::json::parse(is, nullptr, false).contains("a_list");
      }
      return cmd_verify(cfg, a_list_given);
    }
    const RunConfig cfg = resolve(swp, swp_flags);
    if (cfg.a_list.empty() || (swp->count("--a-list") > 0 && parse_list(swp_flags.a_list, "--a-list").empty())) {
      std::cerr << "usage error: sweep needs a non-empty --a-list\n" << swp->help();
      return kExitUsage;
    }
    if (cfg.points.empty() && !cfg.r0_vs_n) {
      std::cerr << "usage error: sweep needs --points or --r0-vs-n\n" << swp->help();
      return kExitUsage;
    }
    stage("config", [&] {
      RunConfig check = cfg;
      if (check.points.empty()) check.points = {0.0};
      check.validate();
      return 0;
    });
    return cmd_sweep(cfg);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const StageError& e) {
    std::cerr << "error in stage " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
