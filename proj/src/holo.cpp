#include "mdisk/holo.hpp"

#include "mdisk/domain.hpp"

#include <cmath>
#include <stdexcept>

namespace mdisk {

namespace {

// Neumaier-compensated complex accumulator.
class CompensatedSum {
 public:
  void add(Complex term) {
    add_part(re_, re_c_, term.real());
    add_part(im_, im_c_, term.imag());
  }
  Complex result() const { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add_part(double& sum, double& carry, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }
  double re_ = 0.0, re_c_ = 0.0, im_ = 0.0, im_c_ = 0.0;
};

}  // namespace

HoloSample HoloField::sample(Complex z) const {
  HoloSample s;
  s.z = z;
  s.h = value(z);
  s.u = s.h.real();
  s.v = s.h.imag();
  s.dzh = derivative(z);
  return s;
}

void FamilyField::guard_poles(Complex z) const {
  for (double b : params_.points()) {
    if (std::abs(z - Complex(b, params_.a())) < kPoleGuard ||
        std::abs(z - Complex(b, -params_.a())) < kPoleGuard) {
      throw std::domain_error("evaluation point coincides with a pole b_j +- i a");
    }
  }
}

Complex FamilyField::value(Complex z) const {
  guard_poles(z);
  const double a = params_.a();
  CompensatedSum sum;
  for (int j = 0; j < params_.n(); ++j) {
    const Complex w = (z - params_.point(j)) / a;
    Complex t = std::atan(w);
    // libstdc++ leaves a signed-zero imaginary part on the real axis; keep
    // real arguments exactly real.
    if (z.imag() == 0.0) t = Complex(t.real(), 0.0);
    sum.add(ConstructionParams::weight(j) / a * t);
  }
  return sum.result();
}

Complex FamilyField::derivative(Complex z) const {
  guard_poles(z);
  const double a2 = params_.a() * params_.a();
  CompensatedSum sum;
  for (int j = 0; j < params_.n(); ++j) {
    const Complex d = z - params_.point(j);
    sum.add(ConstructionParams::weight(j) / (d * d + a2));
  }
  return sum.result();
}

Complex FamilyField::derivative_expanded(Complex z) const {
  guard_poles(z);
  const double a2 = params_.a() * params_.a();
  const double x = z.real(), y = z.imag();
  CompensatedSum sum;
  for (int j = 0; j < params_.n(); ++j) {
    const double dx = x - params_.point(j);
    const double p = dx * dx + a2 - y * y;
    const double den = p * p + 4.0 * dx * dx * y * y;
    sum.add(ConstructionParams::weight(j) * Complex(p / den, -2.0 * dx * y / den));
  }
  return sum.result();
}

HoloSample eval_h(const ConstructionParams& params, Complex z) {
  if (!build_domain(params).contains(z)) {
    throw std::domain_error("point lies outside the domain");
  }
  return FamilyField(params).sample(z);
}

Complex eval_dz_h(const ConstructionParams& params, Complex z) {
  if (!build_domain(params).contains(z)) {
    throw std::domain_error("point lies outside the domain");
  }
  return FamilyField(params).derivative(z);
}

double continuation_check(const ConstructionParams& params, std::span<const Complex> path,
                          const QuadratureConfig& quad) {
  if (path.empty()) return 0.0;
  if (path.front() != Complex(0.0, 0.0)) {
    throw std::invalid_argument("continuation path must start at the base point 0");
  }
  const DomainSpec domain = build_domain(params);
  const FamilyField field(params);
  constexpr int kSegmentProbes = 64;

  Complex accumulated = field.value(0.0);
  double worst = 0.0;
  for (size_t i = 1; i < path.size(); ++i) {
    const Complex p = path[i - 1], q = path[i];
    for (int k = 0; k <= kSegmentProbes; ++k) {
      const Complex probe = p + (q - p) * (static_cast<double>(k) / kSegmentProbes);
      if (!domain.contains(probe)) {
        throw std::domain_error("continuation path leaves the domain");
      }
    }
    const Complex dir = q - p;
    auto integrand = [&](double t) { return field.derivative(p + dir * t) * dir; };
    accumulated += integrate<Complex>(integrand, 0.0, 1.0, quad).value;
    worst = std::max(worst, std::abs(field.value(q) - accumulated));
  }
  return worst;
}

}  // namespace mdisk
