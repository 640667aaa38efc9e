#include "mdisk/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mdisk {

ConstructionParams::ConstructionParams(std::vector<double> points, double a)
    : points_(std::move(points)), a_(a) {
  if (points_.empty()) {
    throw std::invalid_argument("at least one blowup point is required");
  }
  for (size_t j = 0; j < points_.size(); ++j) {
    const double b = points_[j];
    if (!std::isfinite(b) || b <= -0.5 || b >= 0.5) {
      throw std::invalid_argument("blowup point " + std::to_string(b) +
                                  " must lie in (-1/2, 1/2)");
    }
    if (j > 0 && !(points_[j - 1] < b)) {
      throw std::invalid_argument("blowup points must be strictly increasing");
    }
  }
  if (!std::isfinite(a_) || a_ <= 0.0 || a_ >= 0.5) {
    throw std::invalid_argument("pinch parameter a must lie in (0, 1/2)");
  }
}

double ConstructionParams::weight(int j) { return std::ldexp(1.0, -j); }

ConstructionParams ConstructionParams::evenly_spaced(int n, double a) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<double> b(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) b[static_cast<size_t>(j)] = -0.5 + (j + 1.0) / (n + 1.0);
  return {std::move(b), a};
}

}  // namespace mdisk
