#pragma once

#include "mdisk/params.hpp"
#include "mdisk/quadrature.hpp"

#include <complex>
#include <memory>
#include <span>
#include <string>

namespace mdisk {

using Complex = std::complex<double>;

struct HoloSample {
  Complex z;
  Complex h;
  double u = 0.0;  // Re h
  double v = 0.0;  // Im h
  Complex dzh;
};

/// Holomorphic function h with g = exp(i h) as Gauss map data.
class HoloField {
 public:
  virtual ~HoloField() = default;
  virtual Complex value(Complex z) const = 0;
  virtual Complex derivative(Complex z) const = 0;
  virtual std::string name() const = 0;

  HoloSample sample(Complex z) const;
};

/// h_a(z) = sum_j 2^{1-j}/a * arctan((z - b_j)/a), principal branch.
///
/// The principal arctan((z - b)/a) is cut along {Re z = b, |Im z| >= a}. The
/// domain only reaches |y| <= a^{3/2}/2 < a above b_j, so the principal
/// values coincide with continuation from z0 = 0 everywhere on the domain.
class FamilyField final : public HoloField {
 public:
  explicit FamilyField(ConstructionParams params) : params_(std::move(params)) {}

  Complex value(Complex z) const override;
  Complex derivative(Complex z) const override;
  std::string name() const override { return "family"; }

  /// dz h in the expanded real/imaginary form, term by term.
  Complex derivative_expanded(Complex z) const;

  const ConstructionParams& params() const { return params_; }

 private:
  void guard_poles(Complex z) const;
  ConstructionParams params_;
};

/// h(z) = z; produces the helicoid (sinh y sin x, -sinh y cos x, x).
class HelicoidField final : public HoloField {
 public:
  Complex value(Complex z) const override { return z; }
  Complex derivative(Complex) const override { return {1.0, 0.0}; }
  std::string name() const override { return "helicoid"; }
};

/// Distance below which z is treated as sitting on a pole b_j +- i a.
inline constexpr double kPoleGuard = 1e-12;

/// Domain-checked evaluation of h_a, its parts, and dz h_a.
HoloSample eval_h(const ConstructionParams& params, Complex z);
Complex eval_dz_h(const ConstructionParams& params, Complex z);

/// Max over path vertices of |h(z) - (h(0) + int_path dz h dz)|. The path must
/// start at 0 and every segment must stay in the domain.
double continuation_check(const ConstructionParams& params, std::span<const Complex> path,
                          const QuadratureConfig& quad = {});

}  // namespace mdisk
