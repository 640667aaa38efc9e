// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include "mdisk/geometry.hpp"
#include "mdisk/intersect.hpp"
#include "mdisk/mesh.hpp"
#include "mdisk/verify.hpp"

#include <Eigen/Geometry>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace mdisk;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

ConstructionParams family(int n, double a) {
  switch (n) {
    case 1: return {{0.0}, a};
    case 2: return {{-0.2, 0.2}, a};
    default: return {{-0.3, 0.0, 0.3}, a};
  }
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Outcome helicoid_oracle_check() {
  const auto t0 = Clock::now();
  const Immersion imm = make_helicoid_immersion(DomainSpec::rectangle(-1.0, 1.0, 1.0),
                                                {1e-10, 40, "gk15"});
  std::vector<Complex> zs;
  for (int i = 0; i <= 100; ++i) {
    for (int k = 0; k <= 100; ++k) zs.emplace_back(-1.0 + 0.02 * i, -1.0 + 0.02 * k);
  }
  const auto samples = imm.eval_batch(zs);
  double err = 0.0;
  for (const auto& s : samples) {
    err = std::max(err, (s.F - helicoid_oracle(s.z.real(), s.z.imag())).cwiseAbs().maxCoeff());
  }
  const double dt = seconds_since(t0);
  return {err < 1e-8 && dt < 5.0, fmt("max error %.3e", err) + fmt(", %.2f s", dt)};
}

Outcome dual_curvature_check() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  std::mt19937 rng(2024);
  for (int n : {1, 2, 3}) {
    for (double a : {0.2, 0.05}) {
      const ConstructionParams params = family(n, a);
      const DomainSpec d = build_domain(params);
      std::uniform_real_distribution<double> ux(d.x_min(), d.x_max()), unit(-1.0, 1.0);
      for (int i = 0; i < 10000; ++i) {
        const double x = ux(rng);
        const auto s = gauss_curvature(params, {x, unit(rng) * d.column_half_width(x)});
        worst = std::max(worst, std::abs(s.K - s.K_weierstrass) / std::abs(s.K));
      }
    }
  }
  const double dt = seconds_since(t0);
  return {worst <= 1e-12 && dt < 5.0, fmt("max relative gap %.3e", worst) + fmt(", %.2f s", dt)};
}

Outcome blowup_check() {
  double exact_gap = 0.0;
  for (double a : {0.2, 0.1, 0.05, 0.01, 1e-3}) {
    const double K = std::abs(gauss_curvature(family(1, a), 0.0).K);
    exact_gap = std::max(exact_gap, std::abs(K * std::pow(a, 4) - 1.0));
  }
  const bool exact = exact_gap <= 1e-12;

  const std::vector<double> pts = {-0.2, 0.2};
  const std::vector<double> as = {0.1, 0.05, 0.025, 0.0125, 0.00625};
  const BlowupSweep sweep = blowup_sweep(pts, as, 0.1);
  const double s1 = sweep.slope(0), s2 = sweep.slope(1);
  const bool slopes = std::abs(s1 - 4.0) <= 0.01 && std::abs(s2 - 4.0) <= 0.01;
  const double a_min = as.back();
  const double scaled = std::pow(a_min, 4) * std::abs(gauss_curvature(family(2, a_min), 0.2).K);
  const bool limit = std::abs(scaled - 0.25) <= 0.02 * 0.25;
  return {exact && slopes && limit,
          fmt("n=1 |a^4 K - 1| %.1e", exact_gap) + fmt("; slopes %.4f", s1) + fmt(" / %.4f", s2) +
              fmt(" (last two: %.4f", sweep.slope(0, 2)) + fmt(" / %.4f)", sweep.slope(1, 2)) +
              fmt("; a^4|K(b_2)| %.4f", scaled)};
}

Outcome graph_check() {
  const auto t0 = Clock::now();
  const GridSpec grid{400, 41, {}};
  bool ok = true;
  std::string failures;
  double worst_height = 0.0, worst_osc = 0.0, min_graph = INFINITY, min_r0 = INFINITY;
  for (int n : {1, 2, 3}) {
    for (double a : {0.2, 0.1, 0.05}) {
      const Immersion imm = make_family_immersion(family(n, a), {});
      const CheckRecord h = check_height(imm, grid);
      const CheckRecord u = check_u_oscillation(imm, grid);
      const CheckRecord g = check_graph_property(imm, grid);
      const SeparationResult s = check_separation(imm, grid);
      worst_height = std::max(worst_height, h.margin);
      worst_osc = std::max(worst_osc, 1.0 - u.margin);
      min_graph = std::min(min_graph, g.margin);
      min_r0 = std::min(min_r0, s.r0_estimate);
      const bool here = h.margin <= 1e-9 && u.pass && u.margin > 0.0 && g.pass && g.margin > 0.0 &&
                        s.record.pass && s.r0_estimate > 0.0;
      if (!here) failures += fmt(" n=%.0f", n) + fmt(",a=%g", a);
      ok = ok && here;
    }
  }
  const double dt = seconds_since(t0);
  return {ok && dt < 60.0, fmt("height %.2e", worst_height) + fmt("; u-osc %.4f", worst_osc) +
                               fmt("; graph margin %.3e", min_graph) + fmt("; r0 %.4e", min_r0) +
                               fmt("; %.1f s", dt) + (failures.empty() ? "" : ";" + failures)};
}

Outcome embedding_check() {
  const auto t0 = Clock::now();
  const Immersion imm = make_family_immersion(family(1, 0.1), {});
  const SurfaceMesh mesh = build_mesh(imm, {400, 41, {}});
  const CheckRecord rec = check_embedding(mesh);
  const double dt = seconds_since(t0);

  // Negative control 1: a helicoid over more than one full turn, flattened onto z = 0.
  SurfaceMesh flat = build_mesh(
      make_helicoid_immersion(DomainSpec::rectangle(-3.5, 3.5, 0.5), {}), {120, 11, {}});
  for (auto& v : flat.vertices) v.position.z() = 0.0;
  const size_t flat_hits = find_self_intersections(flat).intersecting;

  // Negative control 2: one triangle stabbed through the embedded mesh.
  SurfaceMesh stabbed = mesh;
  const MeshVertex& c = mesh.vertices[static_cast<size_t>(200 * mesh.rows + 25)];
  const Eigen::Vector3d n = imm.tangent_x(c.z).cross(imm.tangent_y(c.z)).normalized();
  const Eigen::Vector3d t = imm.tangent_x(c.z).normalized() * 1e-3;
  const int base = static_cast<int>(stabbed.vertices.size());
  for (const Eigen::Vector3d& p : {Eigen::Vector3d(c.position + 1e-2 * n),
                                   Eigen::Vector3d(c.position - 1e-2 * n),
                                   Eigen::Vector3d(c.position + t)}) {
    MeshVertex v;
    v.position = p;
    stabbed.vertices.push_back(v);
  }
  stabbed.triangles.push_back({base, base + 1, base + 2});
  const size_t stab_hits = find_self_intersections(stabbed).intersecting;

  return {rec.pass && dt < 30.0 && flat_hits > 0 && stab_hits > 0,
          fmt("intersecting pairs %.0f", std::abs(rec.margin)) + fmt("; %.2f s", dt) +
              fmt("; controls: flattened %.0f", static_cast<double>(flat_hits)) +
              fmt(", injected %.0f", static_cast<double>(stab_hits))};
}

Outcome convergence_check() {
  std::vector<ConstructionParams> fam;
  for (double a : {0.1, 0.05, 0.025, 0.0125}) fam.push_back(family(1, a));
  const ConvergenceResult r = check_convergence(fam, 0.1);
  auto seq = [](const char* name, const std::vector<double>& v) {
    std::string s = std::string(" ") + name + " [";
    for (size_t i = 0; i < v.size(); ++i) s += fmt(i ? ", %.3e" : "%.3e", v[i]);
    return s + "]";
  };
  return {r.record.pass, seq("F", r.diff_F) + seq("D1", r.diff_D1) + seq("D2", r.diff_D2)};
}

Outcome spiral_check() {
  const ConstructionParams params = family(1, 1e-4);
  const SheetCount s = sheet_count(params, 0, 0.05);
  const SheetCount q = sheet_count(params, 0, 0.05 / 4);
  const bool near = std::abs(s.u_difference - 10.0) <= 0.02 * 10.0;
  const bool diverge = q.turns > 2.0 * s.turns;
  return {near && diverge, fmt("|u(t)-u(2t)| %.6f", s.u_difference) +
                               fmt("; turns(t) %.4f", s.turns) + fmt(", turns(t/4) %.4f", q.turns)};
}

Outcome off_axis_check() {
  const std::vector<double> pts = {-0.2, 0.2};
  const std::vector<double> as = {0.1, 0.05, 0.025, 0.0125, 0.00625};
  const BlowupSweep sweep = blowup_sweep(pts, as, 0.1);
  const double var = sweep.off_axis_variation();
  const auto& last = sweep.off_axis.back();
  return {var < 0.05, fmt("variation %.4f", var) + fmt(" (sup %.6g", sweep.off_axis[3].sup_abs_K) +
                          fmt(" -> %.6g)", last.sup_abs_K)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "helicoid oracle", helicoid_oracle_check},
      {2, "dual curvature formulas", dual_curvature_check},
      {3, "blowup rate", blowup_check},
      {4, "graph certification", graph_check},
      {5, "embedding", embedding_check},
      {6, "convergence", convergence_check},
      {7, "spiraling", spiral_check},
      {8, "off-axis bound", off_axis_check},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s [%d] %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
