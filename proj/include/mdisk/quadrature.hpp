#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace mdisk {

struct QuadratureConfig {
  double abs_tol = 1e-10;
  int max_depth = 40;
  std::string rule = "gk15";

  void validate() const;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved_error() const { return achieved_; }

 private:
  double achieved_;
};

template <class V>
struct QuadratureResult {
  V value;
  double error = 0.0;
  int evaluations = 0;
};

namespace detail {

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) {
  return std::max(std::abs(v.real()), std::abs(v.imag()));
}
template <class Derived>
double magnitude(const Eigen::MatrixBase<Derived>& v) {
  return v.cwiseAbs().maxCoeff();
}

template <class V>
V zero_like(const V& v) {
  if constexpr (std::is_arithmetic_v<V>) {
    return V(0);
  } else if constexpr (std::is_same_v<V, std::complex<double>>) {
    return V(0.0, 0.0);
  } else {
    return V::Zero(v.size());
  }
}

// Gauss-Kronrod 7/15 nodes on [-1, 1]; index 7 is the centre.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5) and the centre.
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class V>
struct Segment {
  double lo, hi;
  V value;
  double error;
  int depth;
};

template <class V, class F>
Segment<V> gk15(F& f, double lo, double hi, int depth) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const V fc = f(centre);
  V kronrod = fc * kKronrodWeights[7];
  V gauss = fc * kGaussWeights[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[static_cast<size_t>(i)];
    const V f1 = f(centre - dx);
    const V f2 = f(centre + dx);
    const V sum = f1 + f2;
    kronrod += sum * kKronrodWeights[static_cast<size_t>(i)];
    if (i % 2 == 1) gauss += sum * kGaussWeights[static_cast<size_t>(i / 2)];
  }
  kronrod *= half;
  gauss *= half;
  return {lo, hi, kronrod, magnitude(V(kronrod - gauss)), depth};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) integration against an absolute
/// tolerance. The interval with the largest |K15 - G7| estimate is bisected
/// until the summed estimate drops below abs_tol, so refinement follows the
/// integrand magnitude rather than interval length. Throws QuadratureError
/// when every remaining interval has reached max_depth.
template <class V, class F>
QuadratureResult<V> integrate(F&& f, double lo, double hi, const QuadratureConfig& cfg) {
  QuadratureResult<V> out;
  if (lo == hi) {
    out.value = detail::zero_like<V>(f(lo));
    out.evaluations = 1;
    return out;
  }
  std::vector<detail::Segment<V>> segments;
  segments.push_back(detail::gk15<V>(f, lo, hi, 0));
  out.evaluations = 15;
  double total = segments.front().error;

  while (total > cfg.abs_tol) {
    size_t worst = segments.size();
    double worst_err = -1.0;
    for (size_t i = 0; i < segments.size(); ++i) {
      if (segments[i].depth < cfg.max_depth && segments[i].error > worst_err) {
        worst = i;
        worst_err = segments[i].error;
      }
    }
    if (worst == segments.size()) {
      throw QuadratureError("adaptive quadrature did not reach tolerance within max_depth",
                            total);
    }
    const auto seg = segments[worst];
    const double mid = 0.5 * (seg.lo + seg.hi);
    segments[worst] = detail::gk15<V>(f, seg.lo, mid, seg.depth + 1);
    segments.push_back(detail::gk15<V>(f, mid, seg.hi, seg.depth + 1));
    out.evaluations += 30;
    total = 0.0;
    for (const auto& s : segments) total += s.error;
  }

  std::sort(segments.begin(), segments.end(),
            [](const auto& p, const auto& q) { return std::min(p.lo, p.hi) < std::min(q.lo, q.hi); });
  out.value = segments.front().value;
  for (size_t i = 1; i < segments.size(); ++i) out.value += segments[i].value;
  out.error = total;
  return out;
}

}  // namespace mdisk
