#pragma once

#include "mdisk/domain.hpp"
#include "mdisk/holo.hpp"
#include "mdisk/quadrature.hpp"

#include <Eigen/Core>

#include <memory>
#include <span>
#include <vector>

namespace mdisk {

struct ImmersionSample {
  Complex z;
  Eigen::Vector3d F = Eigen::Vector3d::Zero();
  Eigen::Vector3d Fx = Eigen::Vector3d::Zero();  // (sinh v cos u, sinh v sin u, 1)
  Eigen::Vector3d Fy = Eigen::Vector3d::Zero();  // (cosh v sin u, -cosh v cos u, 0)
  double quad_error = 0.0;
};

/// Test-harness fault: the vertical leg picks up a spurious height component
/// of `height_drift` per unit y.
struct FaultInjection {
  double height_drift = 0.0;
};

/// F(x, y) = (0, 0, x) + int_0^y (cosh v sin u, -cosh v cos u, 0)(x, t) dt.
///
/// The axis leg (0,0) -> (x,0) is exact since v vanishes on the real axis.
/// Columns of the domain are vertically convex and contain y = 0, so the
/// vertical leg never leaves the domain.
class Immersion {
 public:
  Immersion(std::shared_ptr<const HoloField> field, DomainSpec domain, QuadratureConfig quad,
            FaultInjection fault = {});

  ImmersionSample eval(Complex z) const;
  /// Groups points by column and accumulates along y from the axis anchor.
  std::vector<ImmersionSample> eval_batch(std::span<const Complex> zs) const;

  /// Closed-form tangents at z.
  Eigen::Vector3d tangent_x(Complex z) const;
  Eigen::Vector3d tangent_y(Complex z) const;

  const HoloField& field() const { return *field_; }
  std::shared_ptr<const HoloField> field_ptr() const { return field_; }
  const DomainSpec& domain() const { return domain_; }
  const QuadratureConfig& quadrature() const { return quad_; }
  const FaultInjection& fault() const { return fault_; }

 private:
  void require_inside(Complex z) const;
  void fill_tangents(ImmersionSample& s) const;

  std::shared_ptr<const HoloField> field_;
  DomainSpec domain_;
  QuadratureConfig quad_;
  FaultInjection fault_;
};

Immersion make_family_immersion(const ConstructionParams& params, const QuadratureConfig& quad,
                               SplitRule rule = SplitRule::kMidpoint, FaultInjection fault = {});
Immersion make_helicoid_immersion(const DomainSpec& rectangle, const QuadratureConfig& quad);

ImmersionSample eval_F(const ConstructionParams& params, Complex z, const QuadratureConfig& quad);
std::vector<ImmersionSample> eval_F_batch(const ConstructionParams& params,
                                          std::span<const Complex> zs,
                                          const QuadratureConfig& quad);

/// (sinh y sin x, -sinh y cos x, x).
Eigen::Vector3d helicoid_oracle(double x, double y);

/// Re int_0^z (1/2 (1/g - g), i/2 (1/g + g), 1) dzeta with g = exp(i h), along
/// the real axis to x and then vertically to z. Integrates the complex
/// integrand directly, including the axis leg; kept as an independent check.
Eigen::Vector3d weierstrass_integral(const HoloField& field, Complex z,
                                     const QuadratureConfig& quad);

}  // namespace mdisk
