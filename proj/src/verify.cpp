#include "mdisk/verify.hpp"

#include "mdisk/intersect.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace mdisk {

void VerificationReport::add(CheckRecord record) { checks.push_back(std::move(record)); }

void VerificationReport::sort() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckRecord& p, const CheckRecord& q) { return p.name < q.name; });
}

bool VerificationReport::all_asserted_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckRecord& c) { return !c.asserted || c.pass; });
}

const CheckRecord* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Tracks the smallest observed value of `slack = bound - measured`.
struct MinTracker {
  double value = kInf;
  Complex where;
  void see(double v, Complex z) {
    if (v < value) {
      value = v;
      where = z;
    }
  }
};

struct MaxTracker {
  double value = -kInf;
  Complex where;
  void see(double v, Complex z) {
    if (v > value) {
      value = v;
      where = z;
    }
  }
};

bool within(double measured, double bound) {
  return measured <= bound + kInequalitySlack * std::max(1.0, std::abs(bound));
}

std::vector<Complex> to_points(const SampleGrid& g) {
  std::vector<Complex> zs;
  zs.reserve(g.points.size());
  for (const auto& p : g.points) zs.emplace_back(p.x, p.y);
  return zs;
}

// (x - b_j)^2 + a^2 for every j.
std::vector<double> offsets(const ConstructionParams& params, double x) {
  std::vector<double> s(static_cast<size_t>(params.n()));
  for (int j = 0; j < params.n(); ++j) {
    const double d = x - params.point(j);
    s[static_cast<size_t>(j)] = d * d + params.a() * params.a();
  }
  return s;
}

nlohmann::json z_json(Complex z) { return {z.real(), z.imag()}; }

}  // namespace

CheckRecord check_height(const Immersion& immersion, const GridSpec& grid) {
  CheckRecord rec;
  rec.name = "height";
  rec.anchor = "x3(F_a(x,y)) = x";
  rec.tolerance = immersion.quadrature().abs_tol;
  MaxTracker worst;
  worst.value = 0.0;
  const auto& pieces = immersion.domain().pieces();
  for (int k = 0; k < static_cast<int>(pieces.size()); ++k) {
    const auto zs = to_points(sample_piece(immersion.domain(), k, grid));
    const auto samples = immersion.eval_batch(zs);
    for (const auto& s : samples) worst.see(std::abs(s.F.z() - s.z.real()), s.z);
  }
  rec.margin = worst.value;
  rec.worst_z = worst.where;
  rec.pass = worst.value <= rec.tolerance;
  rec.details["max_height_error"] = worst.value;
  return rec;
}

CheckRecord check_u_oscillation(const Immersion& immersion, const GridSpec& grid) {
  CheckRecord rec;
  rec.name = "u_oscillation";
  rec.anchor = "max_{|y|<=w} |u_a(x,y) - u_a(x,0)| < 1";
  rec.tolerance = 1.0;
  const HoloField& field = immersion.field();
  const auto& params = immersion.domain().params();

  MaxTracker osc;
  MinTracker pointwise, integrated, link_a, link_b, link_c;
  bool chain_ok = true;
  const auto& pieces = immersion.domain().pieces();
  for (int k = 0; k < static_cast<int>(pieces.size()); ++k) {
    const SampleGrid g = sample_piece(immersion.domain(), k, grid);
    for (int c = 0; c < g.columns; ++c) {
      const double x = g.at(c, 0).x;
      const double u0 = field.value(Complex(x, 0.0)).real();
      double col_osc = 0.0;
      std::vector<double> s;
      if (params) s = offsets(*params, x);
      for (int r = 0; r < g.rows; ++r) {
        const Complex z(x, g.at(c, r).y);
        const double du = std::abs(field.value(z).real() - u0);
        col_osc = std::max(col_osc, du);
        osc.see(du, z);
        if (!params) continue;
        // |du/dy| = |Im dz h| <= 4 sum 2^{1-j} |x - b_j| |y| / s_j^2
        double bound_d = 0.0, bound_i = 0.0;
        for (int j = 0; j < params->n(); ++j) {
          const double sj = s[static_cast<size_t>(j)];
          const double term = ConstructionParams::weight(j) * std::abs(x - params->point(j)) / (sj * sj);
          bound_d += 4.0 * term * std::abs(z.imag());
          bound_i += 2.0 * term * z.imag() * z.imag();
        }
        const double dudy = std::abs(field.derivative(z).imag());
        pointwise.see(bound_d - dudy, z);
        integrated.see(bound_i - du, z);
        chain_ok = chain_ok && within(dudy, bound_d) && within(du, bound_i);
      }
      if (!params) continue;
      const double w = pieces[static_cast<size_t>(k)].half_width(x);
      double a_sum = 0.0, b_sum = 0.0, c_sum = 0.0;
      for (int j = 0; j < params->n(); ++j) {
        const double sj = s[static_cast<size_t>(j)];
        const double wj = ConstructionParams::weight(j);
        const double dist = std::abs(x - params->point(j));
        a_sum += 2.0 * wj * dist * w * w / (sj * sj);
        b_sum += 0.5 * wj * dist / std::sqrt(sj);
        c_sum += 0.5 * wj;
      }
      const Complex zc(x, 0.0);
      link_a.see(a_sum - col_osc, zc);
      link_b.see(b_sum - a_sum, zc);
      link_c.see(c_sum - b_sum, zc);
      chain_ok = chain_ok && within(col_osc, a_sum) && within(a_sum, b_sum) &&
                 within(b_sum, c_sum) && c_sum < 1.0;
    }
  }
  rec.margin = 1.0 - osc.value;
  rec.worst_z = osc.where;
  rec.pass = osc.value < 1.0 && chain_ok;
  rec.details["max_oscillation"] = osc.value;
  if (params) {
    rec.details["chain"] = {
        {"pointwise_du_dy_min_slack", pointwise.value},
        {"integrated_bound_min_slack", integrated.value},
        {"column_bound_min_slack", link_a.value},
        {"nearest_point_link_min_slack", link_b.value},
        {"geometric_sum_link_min_slack", link_c.value},
        {"holds", chain_ok},
    };
  }
  return rec;
}

CheckRecord check_graph_property(const Immersion& immersion, const GridSpec& grid) {
  CheckRecord rec;
  rec.name = "graph_property";
  rec.anchor = "<gamma'(y), gamma'(0)> > cosh(v_a)/2; F_a(x, .) is a graph in {x3 = x}";
  rec.tolerance = 0.0;
  MinTracker margin;
  size_t monotone_failures = 0;
  Complex first_failure;
  const auto& pieces = immersion.domain().pieces();
  for (int k = 0; k < static_cast<int>(pieces.size()); ++k) {
    const SampleGrid g = sample_piece(immersion.domain(), k, grid);
    const auto zs = to_points(g);
    const auto samples = immersion.eval_batch(zs);
    const int m = g.axis_row();
    for (int c = 0; c < g.columns; ++c) {
      const size_t base = static_cast<size_t>(c) * static_cast<size_t>(g.rows);
      const Eigen::Vector3d t0 = samples[base + static_cast<size_t>(m)].Fy;
      const Eigen::Vector3d dir = t0.normalized();
      double prev = -kInf;
      for (int r = 0; r < g.rows; ++r) {
        const ImmersionSample& s = samples[base + static_cast<size_t>(r)];
        const double v = immersion.field().value(s.z).imag();
        margin.see(s.Fy.dot(t0) - std::cosh(v) / 2.0, s.z);
        const double p = s.F.dot(dir);
        if (!(p > prev)) {
          if (monotone_failures == 0) first_failure = s.z;
          ++monotone_failures;
        }
        prev = p;
      }
    }
  }
  rec.margin = margin.value;
  rec.worst_z = monotone_failures ? first_failure : margin.where;
  rec.pass = margin.value > 0.0 && monotone_failures == 0;
  rec.details["min_angle_margin"] = margin.value;
  rec.details["projection_monotonicity_failures"] = monotone_failures;
  return rec;
}

SeparationResult check_separation(const Immersion& immersion, const GridSpec& grid) {
  SeparationResult out;
  CheckRecord& rec = out.record;
  rec.name = "separation";
  rec.anchor = "|F_a(x, +-w(x)) - F_a(x, 0)| > r0 > 0 for all a";
  rec.tolerance = 0.0;
  const auto& params = immersion.domain().params();
  const HoloField& field = immersion.field();

  MinTracker r0;
  MinTracker bound_ratio, dv_slack, minv_slack;
  bool bounds_ok = true;
  const auto& pieces = immersion.domain().pieces();
  for (int k = 0; k < static_cast<int>(pieces.size()); ++k) {
    const Piece& piece = pieces[static_cast<size_t>(k)];
    const SampleGrid g = sample_piece(immersion.domain(), k, grid);
    std::vector<Complex> zs;
    for (int c = 0; c < g.columns; ++c) {
      const double x = g.at(c, 0).x;
      const double w = piece.half_width(x);
      zs.insert(zs.end(), {Complex(x, 0.0), Complex(x, w), Complex(x, -w)});
    }
    const auto samples = immersion.eval_batch(zs);
    double piece_r0 = kInf;
    for (int c = 0; c < g.columns; ++c) {
      const auto& base = samples[3 * static_cast<size_t>(c)];
      const double x = base.z.real();
      const Eigen::Vector3d t0 = base.Fy;
      for (int side = 0; side < 2; ++side) {
        const auto& end = samples[3 * static_cast<size_t>(c) + 1 + static_cast<size_t>(side)];
        const double dist = (end.F - base.F).norm();
        piece_r0 = std::min(piece_r0, dist);
        r0.see(dist, end.z);
        if (!params) continue;
        const double sk = offsets(*params, x)[static_cast<size_t>(k)];
        const double expo = std::pow(sk, -0.25) / (11.0 * std::ldexp(1.0, params->n() - 1));
        const double bound = std::pow(sk, 0.75) / 16.0 * std::exp(expo);
        const double inner = (end.F - base.F).dot(side == 0 ? t0 : Eigen::Vector3d(-t0));
        bound_ratio.see(inner / bound, end.z);
        bounds_ok = bounds_ok && within(bound, inner);
      }

      if (!params) continue;
      // dv/dy = Re dz h >= 12/25 sum 2^{1-j}/s_j > 3/8 sum ..., and on
      // w/2 <= |y| <= w: |v| >= 3/32 2^{1-k} s_k^{-1/4} > s_k^{-1/4} / (11 2^{n-1}).
      const auto s = offsets(*params, x);
      double sum = 0.0;
      for (int j = 0; j < params->n(); ++j) sum += ConstructionParams::weight(j) / s[static_cast<size_t>(j)];
      const double w = piece.half_width(x);
      const double sk = s[static_cast<size_t>(k)];
      const double minv_mid = 3.0 / 32.0 * ConstructionParams::weight(k) * std::pow(sk, -0.25);
      const double minv_final = std::pow(sk, -0.25) / (11.0 * std::ldexp(1.0, params->n() - 1));
      bounds_ok = bounds_ok && 12.0 / 25.0 * sum > 3.0 / 8.0 * sum && minv_mid > minv_final;
      for (int r = 0; r < g.rows; ++r) {
        const Complex z(x, g.at(c, r).y);
        const double dvdy = field.derivative(z).real();
        dv_slack.see(dvdy - 12.0 / 25.0 * sum, z);
        bounds_ok = bounds_ok && within(12.0 / 25.0 * sum, dvdy);
        if (std::abs(z.imag()) >= w / 2.0) {
          const double v = std::abs(field.value(z).imag());
          minv_slack.see(v - minv_mid, z);
          bounds_ok = bounds_ok && within(minv_mid, v);
        }
      }
    }
    out.r0_per_piece.push_back(piece_r0);
  }
  out.r0_estimate = r0.value;
  rec.margin = r0.value;
  rec.worst_z = r0.where;
  rec.pass = r0.value > 0.0 && bounds_ok;
  rec.details["r0_estimate"] = r0.value;
  rec.details["r0_per_piece"] = out.r0_per_piece;
  if (params) {
    rec.details["chain"] = {
        {"separation_over_exponential_bound_min_ratio", bound_ratio.value},
        {"separation_bound_worst_z", z_json(bound_ratio.where)},
        {"dv_dy_lower_bound_min_slack", dv_slack.value},
        {"min_v_lower_bound_min_slack", minv_slack.value},
        {"holds", bounds_ok},
    };
  }
  return out;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  size_t find(size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }
  void join(size_t a, size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<size_t> parent_;
};

}  // namespace

CheckRecord check_embedding(const SurfaceMesh& mesh) {
  CheckRecord rec;
  rec.name = "embedding";
  rec.anchor = "F_a is an embedding; off-axis part is two multi-valued graphs";
  rec.tolerance = 0.0;

  const SelfIntersectionResult hits = find_self_intersections(mesh);

  const size_t nv = mesh.vertices.size();
  auto off_axis = [&](int v) { return mesh.vertices[static_cast<size_t>(v)].z.imag() != 0.0; };
  DisjointSets sets(nv);
  for (const auto& t : mesh.triangles) {
    for (int e = 0; e < 3; ++e) {
      const int p = t[static_cast<size_t>(e)], q = t[static_cast<size_t>((e + 1) % 3)];
      if (off_axis(p) && off_axis(q)) sets.join(static_cast<size_t>(p), static_cast<size_t>(q));
    }
  }
  std::map<size_t, int> component_sign;  // root -> sign of y (0 if mixed)
  for (size_t v = 0; v < nv; ++v) {
    if (!off_axis(static_cast<int>(v))) continue;
    const int sign = mesh.vertices[v].z.imag() > 0 ? 1 : -1;
    auto [it, fresh] = component_sign.emplace(sets.find(v), sign);
    if (!fresh && it->second != sign) it->second = 0;
  }
  bool components_ok = component_sign.size() == 2;
  for (const auto& [root, sign] : component_sign) components_ok = components_ok && sign != 0;

  // Horizontal projection orientation per component.
  std::map<size_t, std::pair<size_t, size_t>> orientation;  // root -> (#positive, #negative)
  size_t flat = 0;
  for (const auto& t : mesh.triangles) {
    if (!(off_axis(t[0]) && off_axis(t[1]) && off_axis(t[2]))) continue;
    const auto& p0 = mesh.vertices[static_cast<size_t>(t[0])].position;
    const auto& p1 = mesh.vertices[static_cast<size_t>(t[1])].position;
    const auto& p2 = mesh.vertices[static_cast<size_t>(t[2])].position;
    const double area = (p1.x() - p0.x()) * (p2.y() - p0.y()) - (p1.y() - p0.y()) * (p2.x() - p0.x());
    auto& counts = orientation[sets.find(static_cast<size_t>(t[0]))];
    if (area > 0) {
      ++counts.first;
    } else if (area < 0) {
      ++counts.second;
    } else {
      ++flat;
    }
  }
  size_t orientation_violations = flat;
  for (const auto& [root, counts] : orientation) {
    orientation_violations += std::min(counts.first, counts.second);
  }

  // Turns of the first off-axis row above the axis, when the mesh is structured.
  double turns = 0.0;
  if (mesh.columns > 1 && mesh.rows >= 3 &&
      mesh.vertices.size() == static_cast<size_t>(mesh.columns) * static_cast<size_t>(mesh.rows)) {
    const int row = (mesh.rows - 1) / 2 + 1;
    double prev = 0.0, total = 0.0, lo = 0.0, hi = 0.0;
    for (int c = 0; c < mesh.columns; ++c) {
      const auto& p = mesh.vertices[static_cast<size_t>(c * mesh.rows + row)].position;
      const double ang = std::atan2(p.y(), p.x());
      if (c > 0) {
        double d = ang - prev;
        d -= 2.0 * std::numbers::pi * std::round(d / (2.0 * std::numbers::pi));
        total += d;
        lo = std::min(lo, total);
        hi = std::max(hi, total);
      }
      prev = ang;
    }
    turns = (hi - lo) / (2.0 * std::numbers::pi);
  }

  rec.pass = hits.intersecting == 0 && hits.degenerate == 0 && components_ok &&
             orientation_violations == 0;
  rec.margin = hits.intersecting ? -static_cast<double>(hits.intersecting) : 0.0;
  if (!hits.pairs.empty()) {
    const auto& tri = mesh.triangles[static_cast<size_t>(hits.pairs.front().first)];
    rec.worst_z = mesh.vertices[static_cast<size_t>(tri[0])].z;
  }
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [p, q] : hits.pairs) pairs.push_back({p, q});
  rec.details = {
      {"triangles", mesh.triangles.size()},
      {"intersecting_pairs", hits.intersecting},
      {"first_pairs", pairs},
      {"degenerate_triangles", hits.degenerate},
      {"narrow_phase_tests", hits.tested},
      {"off_axis_components", component_sign.size()},
      {"components_split_by_sign", components_ok},
      {"projection_orientation_violations", orientation_violations},
      {"axis_row_turns", turns},
  };
  return rec;
}

SheetCount sheet_count(const ConstructionParams& params, int j, double t) {
  if (j < 0 || j >= params.n()) throw std::out_of_range("point index out of range");
  const DomainSpec domain = build_domain(params);
  const Piece& piece = domain.pieces()[static_cast<size_t>(j)];
  const double b = params.point(j);
  if (!(t > 0.0) || b + 2.0 * t > piece.hi) {
    throw std::invalid_argument("sheet-count interval [b_j + t, b_j + 2t] leaves the piece");
  }
  const FamilyField field(params);
  SheetCount out;
  out.j = j;
  out.t = t;
  out.a = params.a();
  out.u_difference = std::abs(field.value(b + t).real() - field.value(b + 2.0 * t).real());
  out.turns = out.u_difference / (2.0 * std::numbers::pi);
  out.predicted = 1.0 / (4.0 * std::numbers::pi * t);
  out.weighted_limit = ConstructionParams::weight(j) / (2.0 * t);
  return out;
}

ConvergenceResult check_convergence(std::span<const ConstructionParams> family, double delta,
                                    const ConvergenceOptions& options) {
  if (family.size() < 3) throw std::invalid_argument("convergence needs at least three values of a");
  for (size_t i = 1; i < family.size(); ++i) {
    if (!(family[i].a() < family[i - 1].a())) {
      throw std::invalid_argument("convergence family must have strictly decreasing a");
    }
  }
  std::vector<DomainSpec> domains;
  for (const auto& p : family) domains.push_back(build_domain(p));
  const CompactRegion region = omega_zero(domains, delta);
  const double h = options.step;
  const auto base = region.sample(options.nx, options.ny, 2.0 * h);
  if (base.empty()) throw std::invalid_argument("compact region has no interior samples");

  // 3x3 stencil per base point, offsets (dx, dy) in {-h, 0, h}^2.
  std::vector<Complex> stencil;
  stencil.reserve(9 * base.size());
  for (const Complex& z : base) {
    for (int i = -1; i <= 1; ++i)
      for (int j = -1; j <= 1; ++j) stencil.emplace_back(z.real() + i * h, z.imag() + j * h);
  }
  auto at = [](size_t p, int i, int j) { return 9 * p + static_cast<size_t>(3 * (i + 1) + (j + 1)); };

  struct Derivs {
    std::vector<Eigen::Vector3d> F;
    std::vector<std::array<Eigen::Vector3d, 2>> d1;
    std::vector<std::array<Eigen::Vector3d, 3>> d2;
    std::vector<double> conf;
  };
  std::vector<Derivs> all;
  for (const auto& params : family) {
    const Immersion imm = make_family_immersion(params, options.quad);
    const auto s = imm.eval_batch(stencil);
    Derivs d;
    for (size_t p = 0; p < base.size(); ++p) {
      auto F = [&](int i, int j) -> const Eigen::Vector3d& { return s[at(p, i, j)].F; };
      d.F.push_back(F(0, 0));
      d.d1.push_back({(F(1, 0) - F(-1, 0)) / (2 * h), (F(0, 1) - F(0, -1)) / (2 * h)});
      d.d2.push_back({(F(1, 0) - 2 * F(0, 0) + F(-1, 0)) / (h * h),
                      (F(0, 1) - 2 * F(0, 0) + F(0, -1)) / (h * h),
                      (F(1, 1) - F(1, -1) - F(-1, 1) + F(-1, -1)) / (4 * h * h)});
      const double ch = std::cosh(imm.field().value(base[p]).imag());
      d.conf.push_back(ch * ch);
    }
    all.push_back(std::move(d));
  }

  ConvergenceResult out;
  for (const auto& p : family) out.a_values.push_back(p.a());
  Complex worst_z;
  for (size_t k = 1; k < all.size(); ++k) {
    const Derivs& A = all[k - 1];
    const Derivs& B = all[k];
    double dF = 0.0, d1 = 0.0, d2 = 0.0;
    for (size_t p = 0; p < base.size(); ++p) {
      const double scale = B.conf[p];
      const double f = (A.F[p] - B.F[p]).norm();
      if (f > dF && k + 1 == all.size()) worst_z = base[p];
      dF = std::max(dF, f);
      for (size_t i = 0; i < 2; ++i) d1 = std::max(d1, (A.d1[p][i] - B.d1[p][i]).norm() / scale);
      for (size_t i = 0; i < 3; ++i) d2 = std::max(d2, (A.d2[p][i] - B.d2[p][i]).norm() / scale);
    }
    out.diff_F.push_back(dF);
    out.diff_D1.push_back(d1);
    out.diff_D2.push_back(d2);
  }

  auto decreasing = [](const std::vector<double>& v) {
    for (size_t i = 1; i < v.size(); ++i) {
      if (!(v[i] < v[i - 1])) return false;
    }
    return true;
  };
  // Limit slabs: every sampled height stays off the planes x3 = b_j.
  double slab_gap = kInf;
  for (const auto& F : all.back().F) {
    for (double b : family.front().points()) slab_gap = std::min(slab_gap, std::abs(F.z() - b));
  }

  const double last = std::max({out.diff_F.back(), out.diff_D1.back(), out.diff_D2.back()});
  CheckRecord& rec = out.record;
  rec.name = "convergence";
  rec.anchor = "F_a converges uniformly in C^2 on compact subsets of Omega_0 (a -> 0)";
  rec.tolerance = options.tolerance;
  rec.margin = options.tolerance - last;
  rec.worst_z = worst_z;
  const bool dec = decreasing(out.diff_F) && decreasing(out.diff_D1) && decreasing(out.diff_D2);
  rec.pass = dec && last < options.tolerance && slab_gap > 0.0;
  rec.details = {
      {"a_values", out.a_values},
      {"delta", delta},
      {"step", h},
      {"samples", base.size()},
      {"diff_F", out.diff_F},
      {"diff_D1_scaled", out.diff_D1},
      {"diff_D2_scaled", out.diff_D2},
      {"strictly_decreasing", dec},
      {"limit_slab_min_gap", slab_gap},
  };
  return out;
}

namespace {

nlohmann::json grid_json(const GridSpec& grid) {
  nlohmann::json j = {{"nx", grid.nx}, {"ny", grid.ny}};
  if (grid.clip) j["clip"] = {grid.clip->x_lo, grid.clip->x_hi, grid.clip->y_max};
  return j;
}

void run_common(const Immersion& imm, const VerifyOptions& options, VerificationReport& report) {
  report.add(check_height(imm, options.grid));
  report.add(check_u_oscillation(imm, options.grid));
  report.add(check_graph_property(imm, options.grid));
  report.add(check_separation(imm, options.grid).record);
  if (options.embedding) report.add(check_embedding(build_mesh(imm, options.grid)));
}

}  // namespace

VerificationReport run_verification(const ConstructionParams& params, const VerifyOptions& options) {
  VerificationReport report;
  report.params = {{"points", std::vector<double>(params.points().begin(), params.points().end())},
                   {"a", params.a()},
                   {"mode", "family"}};
  report.grid = grid_json(options.grid);
  const Immersion imm = make_family_immersion(params, options.quad, options.split, options.fault);
  run_common(imm, options, report);

  for (int j = 0; j < params.n(); ++j) {
    const Piece& piece = imm.domain().pieces()[static_cast<size_t>(j)];
    const double t = std::min(0.05, (piece.hi - params.point(j)) / 2.5);
    if (!(t > 0.0)) continue;
    const SheetCount sc = sheet_count(params, j, t);
    CheckRecord rec;
    rec.name = "sheet_count_" + std::to_string(j + 1);
    rec.anchor = "N_t ~ 1/(4 pi t) turns near x3 = b_j";
    rec.asserted = false;
    rec.pass = sc.turns > 0.0;
    rec.margin = sc.turns;
    rec.worst_z = Complex(params.point(j) + t, 0.0);
    rec.details = {{"t", sc.t},         {"turns", sc.turns},
                   {"predicted", sc.predicted}, {"u_difference", sc.u_difference},
                   {"weighted_limit", sc.weighted_limit}};
    report.add(std::move(rec));
  }

  if (options.a_sweep.size() >= 3) {
    std::vector<ConstructionParams> family;
    for (double a : options.a_sweep) family.push_back(params.with_a(a));
    report.add(check_convergence(family, options.delta).record);
  }
  report.sort();
  return report;
}

VerificationReport run_helicoid_verification(const DomainSpec& rectangle,
                                             const VerifyOptions& options) {
  VerificationReport report;
  report.params = {{"mode", "helicoid"},
                   {"x_range", {rectangle.x_min(), rectangle.x_max()}},
                   {"half_width", rectangle.pieces().front().half_width(0.0)}};
  report.grid = grid_json(options.grid);
  const Immersion imm = make_helicoid_immersion(rectangle, options.quad);
  run_common(imm, options, report);
  report.sort();
  return report;
}

}  // namespace mdisk
