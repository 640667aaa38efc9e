#include "mdisk/immersion.hpp"

#include "mdisk/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace mdisk {

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0)) throw std::invalid_argument("quadrature abs_tol must be positive");
  if (max_depth < 1) throw std::invalid_argument("quadrature max_depth must be at least 1");
  if (rule != "gk15") throw std::invalid_argument("unsupported quadrature rule: " + rule);
}

Immersion::Immersion(std::shared_ptr<const HoloField> field, DomainSpec domain,
                     QuadratureConfig quad, FaultInjection fault)
    : field_(std::move(field)), domain_(std::move(domain)), quad_(std::move(quad)), fault_(fault) {
  if (!field_) throw std::invalid_argument("immersion needs a holomorphic field");
  quad_.validate();
}

void Immersion::require_inside(Complex z) const {
  if (!domain_.contains(z)) {
    throw std::domain_error("point (" + std::to_string(z.real()) + ", " +
                            std::to_string(z.imag()) + ") lies outside the domain");
  }
}

Eigen::Vector3d Immersion::tangent_x(Complex z) const {
  const Complex h = field_->value(z);
  const double u = h.real(), v = h.imag();
  return {std::sinh(v) * std::cos(u), std::sinh(v) * std::sin(u), 1.0};
}

Eigen::Vector3d Immersion::tangent_y(Complex z) const {
  const Complex h = field_->value(z);
  const double u = h.real(), v = h.imag();
  return {std::cosh(v) * std::sin(u), -std::cosh(v) * std::cos(u), 0.0};
}

void Immersion::fill_tangents(ImmersionSample& s) const {
  const Complex h = field_->value(s.z);
  const double u = h.real(), v = h.imag();
  const double sh = std::sinh(v), ch = std::cosh(v), su = std::sin(u), cu = std::cos(u);
  s.Fx = {sh * cu, sh * su, 1.0};
  s.Fy = {ch * su, -ch * cu, 0.0};
}

namespace {

// Horizontal part of dF/dy along the column at x.
struct VerticalIntegrand {
  const HoloField& field;
  double x;
  Eigen::Vector2d operator()(double t) const {
    const Complex h = field.value(Complex(x, t));
    const double ch = std::cosh(h.imag());
    return {ch * std::sin(h.real()), -ch * std::cos(h.real())};
  }
};

}  // namespace

ImmersionSample Immersion::eval(Complex z) const {
  require_inside(z);
  ImmersionSample s;
  s.z = z;
  const double x = z.real(), y = z.imag();
  VerticalIntegrand f{*field_, x};
  const auto r = integrate<Eigen::Vector2d>(f, 0.0, y, quad_);
  s.F = {r.value.x(), r.value.y(), x + fault_.height_drift * y};
  s.quad_error = r.error;
  fill_tangents(s);
  return s;
}

std::vector<ImmersionSample> Immersion::eval_batch(std::span<const Complex> zs) const {
  for (const Complex& z : zs) require_inside(z);
  std::map<double, std::vector<size_t>> columns;
  for (size_t i = 0; i < zs.size(); ++i) columns[zs[i].real()].push_back(i);
  std::vector<const std::vector<size_t>*> jobs;
  std::vector<double> xs;
  for (auto& [x, idx] : columns) {
    xs.push_back(x);
    jobs.push_back(&idx);
  }

  std::vector<ImmersionSample> out(zs.size());
  parallel_for(jobs.size(), [&](size_t job) {
    const double x = xs[job];
    const auto& idx = *jobs[job];
    VerticalIntegrand f{*field_, x};
    // Ascending |y| on each side of the axis; every leg gets an equal share of
    // the tolerance so a whole side stays within abs_tol.
    for (int side : {1, -1}) {
      std::vector<size_t> order;
      for (size_t i : idx) {
        const double y = zs[i].imag();
        if ((side > 0 && y >= 0.0) || (side < 0 && y < 0.0)) order.push_back(i);
      }
      std::stable_sort(order.begin(), order.end(), [&](size_t p, size_t q) {
        return std::abs(zs[p].imag()) < std::abs(zs[q].imag());
      });
      if (order.empty()) continue;
      QuadratureConfig leg = quad_;
      leg.abs_tol = quad_.abs_tol / static_cast<double>(order.size());
      Eigen::Vector2d acc = Eigen::Vector2d::Zero();
      double err = 0.0;
      double y_prev = 0.0;
      for (size_t i : order) {
        const double y = zs[i].imag();
        if (y != y_prev) {
          const auto r = integrate<Eigen::Vector2d>(f, y_prev, y, leg);
          acc += r.value;
          err += r.error;
          y_prev = y;
        }
        ImmersionSample& s = out[i];
        s.z = zs[i];
        s.F = {acc.x(), acc.y(), x + fault_.height_drift * y};
        s.quad_error = err;
        fill_tangents(s);
      }
    }
  });
  return out;
}

Immersion make_family_immersion(const ConstructionParams& params, const QuadratureConfig& quad,
                               SplitRule rule, FaultInjection fault) {
  return Immersion(std::make_shared<FamilyField>(params), build_domain(params, rule), quad, fault);
}

Immersion make_helicoid_immersion(const DomainSpec& rectangle, const QuadratureConfig& quad) {
  return Immersion(std::make_shared<HelicoidField>(), rectangle, quad);
}

ImmersionSample eval_F(const ConstructionParams& params, Complex z, const QuadratureConfig& quad) {
  return make_family_immersion(params, quad).eval(z);
}

std::vector<ImmersionSample> eval_F_batch(const ConstructionParams& params,
                                          std::span<const Complex> zs,
                                          const QuadratureConfig& quad) {
  return make_family_immersion(params, quad).eval_batch(zs);
}

Eigen::Vector3d helicoid_oracle(double x, double y) {
  return {std::sinh(y) * std::sin(x), -std::sinh(y) * std::cos(x), x};
}

Eigen::Vector3d weierstrass_integral(const HoloField& field, Complex z,
                                     const QuadratureConfig& quad) {
  const Complex i(0.0, 1.0);
  auto integrand = [&](Complex zeta, Complex dzeta) {
    const Complex g = std::exp(i * field.value(zeta));
    const Complex gi = 1.0 / g;
    Eigen::Vector3d out;
    out.x() = (0.5 * (gi - g) * dzeta).real();
    out.y() = (0.5 * i * (gi + g) * dzeta).real();
    out.z() = dzeta.real();
    return out;
  };
  const double x = z.real(), y = z.imag();
  auto horizontal = [&](double t) { return integrand(Complex(t, 0.0), 1.0); };
  auto vertical = [&](double t) { return integrand(Complex(x, t), i); };
  Eigen::Vector3d F = integrate<Eigen::Vector3d>(horizontal, 0.0, x, quad).value;
  F += integrate<Eigen::Vector3d>(vertical, 0.0, y, quad).value;
  return F;
}

}  // namespace mdisk
