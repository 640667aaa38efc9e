#pragma once

#include <span>
#include <vector>

namespace mdisk {

/// One member of the family: blowup heights b_1 < ... < b_n in (-1/2, 1/2)
/// and the pinch parameter a in (0, 1/2). The base point is always z0 = 0.
class ConstructionParams {
 public:
  ConstructionParams(std::vector<double> points, double a);

  std::span<const double> points() const { return points_; }
  double point(int j) const { return points_[static_cast<size_t>(j)]; }
  double a() const { return a_; }
  int n() const { return static_cast<int>(points_.size()); }

  /// 2^{-j} for the zero-based index j, i.e. 2^{1-j} in one-based terms.
  static double weight(int j);

  ConstructionParams with_a(double a) const { return {points_, a}; }

  /// n points spread evenly over (-1/2, 1/2): b_j = -1/2 + j/(n+1).
  static ConstructionParams evenly_spaced(int n, double a);

 private:
  std::vector<double> points_;
  double a_;
};

}  // namespace mdisk
