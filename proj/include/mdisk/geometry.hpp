#pragma once

#include "mdisk/holo.hpp"
#include "mdisk/mesh.hpp"
#include "mdisk/params.hpp"

#include <Eigen/Core>

#include <span>
#include <vector>

namespace mdisk {

struct CurvatureSample {
  Complex z;
  double K = 0.0;            // -|dz h|^2 / cosh^4 v
  double K_weierstrass = 0.0;  // same quantity from g = exp(i h), phi = dz
  Eigen::Vector3d normal = Eigen::Vector3d::UnitZ();
  double conf = 1.0;  // cosh^2 v
};

/// (2 Re g, 2 Im g, |g|^2 - 1) / (|g|^2 + 1).
Eigen::Vector3d unit_normal(Complex g);

/// Both curvature formulas plus the Gauss-map normal; no domain check.
CurvatureSample gauss_curvature(const HoloField& field, Complex z);
/// Domain-checked variant for the h_a family.
CurvatureSample gauss_curvature(const ConstructionParams& params, Complex z);

/// |A|^2 = -2K on a minimal surface.
double second_ff_norm(const ConstructionParams& params, Complex z);
inline double second_ff_norm_from_K(double K) { return -2.0 * K; }

struct BlowupEntry {
  double a = 0.0;
  int j = 0;                  // zero-based point index
  double K_at_point = 0.0;    // |K_a(b_j)|
  double lower_bound = 0.0;   // (2^{1-j} / a^2)^2
};

struct OffAxisEntry {
  double a = 0.0;
  double delta = 0.0;
  double sup_abs_K = 0.0;
  Complex argmax;
  int refinements = 0;
};

struct BlowupSweep {
  std::vector<double> points;
  std::vector<double> a_values;
  double delta = 0.0;
  std::vector<BlowupEntry> at_points;  // a-major, then j
  std::vector<OffAxisEntry> off_axis;  // one per a

  bool lower_bounds_hold() const;
  /// Least-squares slope of log|K_a(b_j)| against log(1/a) over all a, or
  /// over the trailing `last` values when last > 1.
  double slope(int j, int last = 0) const;
  /// Relative change of the off-axis sup between the two smallest a.
  double off_axis_variation() const;
};

/// Tabulates |K_a(b_j)| and the sup of |K_a| over {|x - b_j| >= delta} for
/// each a. The sup is a grid maximum refined until it changes by < 1%.
BlowupSweep blowup_sweep(std::span<const double> points, std::span<const double> a_values,
                         double delta);

double fitted_slope(std::span<const double> xs, std::span<const double> ys);

/// Discrete Gauss curvature at an interior vertex: angle defect divided by a
/// third of the incident triangle area.
double angle_defect_curvature(const SurfaceMesh& mesh, int vertex);

}  // namespace mdisk
