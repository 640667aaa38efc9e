#include "mdisk/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>

using namespace mdisk;

TEST(Quadrature, PolynomialIsExact) {
  const auto r = integrate<double>([](double x) { return 3 * x * x - 2 * x + 1; }, -1.0, 2.0, {});
  EXPECT_NEAR(r.value, 9.0 - 3.0 + 3.0, 1e-13);
  EXPECT_LE(r.error, 1e-10);
}

TEST(Quadrature, ReversedLimitsFlipSign) {
  auto f = [](double x) { return std::exp(x); };
  const double fwd = integrate<double>(f, 0.0, 1.0, {}).value;
  const double bwd = integrate<double>(f, 1.0, 0.0, {}).value;
  EXPECT_NEAR(fwd, std::exp(1.0) - 1.0, 1e-12);
  EXPECT_NEAR(bwd, -fwd, 1e-14);
}

TEST(Quadrature, EmptyIntervalIsZero) {
  const auto r = integrate<Eigen::Vector2d>(
      [](double) { return Eigen::Vector2d(1.0, 2.0); }, 0.3, 0.3, {});
  EXPECT_EQ(r.value, Eigen::Vector2d::Zero());
  EXPECT_EQ(r.error, 0.0);
}

TEST(Quadrature, PeakedIntegrandRefinesWhereLarge) {
  // int_{-1}^{1} eps / (x^2 + eps^2) dx = 2 atan(1/eps)
  const double eps = 1e-3;
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-10;
  const auto r = integrate<double>([eps](double x) { return eps / (x * x + eps * eps); }, -1.0, 1.0, cfg);
  EXPECT_NEAR(r.value, 2.0 * std::atan(1.0 / eps), 1e-10);
  EXPECT_GT(r.evaluations, 15);
}

TEST(Quadrature, ComplexValued) {
  using C = std::complex<double>;
  const auto r = integrate<C>([](double t) { return std::exp(C(0.0, t)); }, 0.0, M_PI, {});
  EXPECT_NEAR(r.value.real(), 0.0, 1e-12);
  EXPECT_NEAR(r.value.imag(), 2.0, 1e-12);
}

TEST(Quadrature, DepthLimitReportsAchievedError) {
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-14;
  cfg.max_depth = 1;
  const double eps = 1e-6;
  try {
    integrate<double>([eps](double x) { return eps / (x * x + eps * eps); }, -1.0, 1.0, cfg);
    FAIL() << "expected QuadratureError";
  } catch (const QuadratureError& e) {
    EXPECT_GT(e.achieved_error(), cfg.abs_tol);
  }
}

TEST(Quadrature, ConfigValidation) {
  QuadratureConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.abs_tol = 0.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.max_depth = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.rule = "simpson";
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}
