#include "mdisk/geometry.hpp"

#include "mdisk/domain.hpp"

#include <Eigen/Geometry>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mdisk {

Eigen::Vector3d unit_normal(Complex g) {
  const double g2 = std::norm(g);
  return Eigen::Vector3d(2.0 * g.real(), 2.0 * g.imag(), g2 - 1.0) / (g2 + 1.0);
}

CurvatureSample gauss_curvature(const HoloField& field, Complex z) {
  const Complex h = field.value(z);
  const Complex dh = field.derivative(z);
  const double v = h.imag();
  const double ch = std::cosh(v);

  CurvatureSample s;
  s.z = z;
  s.conf = ch * ch;
  s.K = -std::norm(dh) / (s.conf * s.conf);

  // Weierstrass route: g = exp(i h), |phi| = 1.
  const Complex g = std::exp(Complex(0.0, 1.0) * h);
  const Complex dg = Complex(0.0, 1.0) * g * dh;
  const double abs_g = std::abs(g);
  const double q = 4.0 * std::abs(dg) * abs_g / std::pow(1.0 + abs_g * abs_g, 2);
  s.K_weierstrass = -q * q;
  s.normal = unit_normal(g);
  return s;
}

CurvatureSample gauss_curvature(const ConstructionParams& params, Complex z) {
  if (!build_domain(params).contains(z)) {
    throw std::domain_error("point lies outside the domain");
  }
  return gauss_curvature(FamilyField(params), z);
}

double second_ff_norm(const ConstructionParams& params, Complex z) {
  return second_ff_norm_from_K(gauss_curvature(params, z).K);
}

double fitted_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw std::invalid_argument("slope fit needs at least two paired samples");
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

bool BlowupSweep::lower_bounds_hold() const {
  for (const auto& e : at_points) {
    if (!(e.K_at_point >= e.lower_bound)) return false;
  }
  return true;
}

double BlowupSweep::slope(int j, int last) const {
  std::vector<double> xs, ys;
  for (const auto& e : at_points) {
    if (e.j != j) continue;
    xs.push_back(std::log(1.0 / e.a));
    ys.push_back(std::log(e.K_at_point));
  }
  if (last > 1 && static_cast<size_t>(last) < xs.size()) {
    xs.erase(xs.begin(), xs.end() - last);
    ys.erase(ys.begin(), ys.end() - last);
  }
  return fitted_slope(xs, ys);
}

double BlowupSweep::off_axis_variation() const {
  if (off_axis.size() < 2) throw std::logic_error("need two sweep values for the variation");
  const double p = off_axis[off_axis.size() - 2].sup_abs_K;
  const double q = off_axis.back().sup_abs_K;
  return std::abs(q - p) / std::max(p, q);
}

BlowupSweep blowup_sweep(std::span<const double> points, std::span<const double> a_values,
                         double delta) {
  if (a_values.empty()) throw std::invalid_argument("sweep needs at least one value of a");
  for (size_t i = 1; i < a_values.size(); ++i) {
    if (!(a_values[i] < a_values[i - 1])) {
      throw std::invalid_argument("sweep values of a must be strictly decreasing");
    }
  }
  BlowupSweep sweep;
  sweep.points.assign(points.begin(), points.end());
  sweep.a_values.assign(a_values.begin(), a_values.end());
  sweep.delta = delta;

  for (double a : a_values) {
    const ConstructionParams params(sweep.points, a);
    const FamilyField field(params);
    for (int j = 0; j < params.n(); ++j) {
      BlowupEntry e;
      e.a = a;
      e.j = j;
      e.K_at_point = -gauss_curvature(field, params.point(j)).K;
      const double lead = ConstructionParams::weight(j) / (a * a);
      e.lower_bound = lead * lead;
      sweep.at_points.push_back(e);
    }

    const CompactRegion region({build_domain(params)}, delta);
    OffAxisEntry off;
    off.a = a;
    off.delta = delta;
    int nx = 50, ny = 11;
    double previous = -1.0;
    for (int level = 0; level < 8; ++level) {
      double best = 0.0;
      Complex where;
      for (const Complex& z : region.sample(nx, ny)) {
        const double k = -gauss_curvature(field, z).K;
        if (k > best) {
          best = k;
          where = z;
        }
      }
      off.sup_abs_K = best;
      off.argmax = where;
      off.refinements = level;
      if (previous > 0.0 && std::abs(best - previous) < 0.01 * best) break;
      previous = best;
      nx = 2 * nx;
      ny = 2 * ny - 1;
    }
    sweep.off_axis.push_back(off);
  }
  return sweep;
}

double angle_defect_curvature(const SurfaceMesh& mesh, int vertex) {
  double angle = 0.0, area = 0.0;
  const Eigen::Vector3d& p = mesh.vertices[static_cast<size_t>(vertex)].position;
  for (const auto& t : mesh.triangles) {
    int k = -1;
    for (int i = 0; i < 3; ++i) {
      if (t[static_cast<size_t>(i)] == vertex) k = i;
    }
    if (k < 0) continue;
    const Eigen::Vector3d& q = mesh.vertices[static_cast<size_t>(t[static_cast<size_t>((k + 1) % 3)])].position;
    const Eigen::Vector3d& r = mesh.vertices[static_cast<size_t>(t[static_cast<size_t>((k + 2) % 3)])].position;
    const Eigen::Vector3d e1 = q - p, e2 = r - p;
    angle += std::atan2(e1.cross(e2).norm(), e1.dot(e2));
    area += 0.5 * e1.cross(e2).norm();
  }
  if (area <= 0.0) throw std::invalid_argument("vertex has no incident triangles");
  return (2.0 * std::numbers::pi - angle) / (area / 3.0);
}

}  // namespace mdisk
