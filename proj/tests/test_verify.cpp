#include "mdisk/verify.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace mdisk;

namespace {

const ConstructionParams kPair({-0.2, 0.2}, 0.1);
const GridSpec kGrid{60, 11, {}};

}  // namespace

TEST(Verify, HeightHolds) {
  const Immersion imm = make_family_immersion(kPair, {});
  const auto r = check_height(imm, kGrid);
  EXPECT_TRUE(r.pass);
  EXPECT_LE(r.margin, 1e-10);
}

TEST(Verify, HeightFaultDetected) {
  const Immersion imm = make_family_immersion(kPair, {}, SplitRule::kMidpoint, {1e-3});
  EXPECT_FALSE(check_height(imm, kGrid).pass);
}

TEST(Verify, OscillationAndGraph) {
  const Immersion imm = make_family_immersion(kPair, {});
  const auto osc = check_u_oscillation(imm, kGrid);
  EXPECT_TRUE(osc.pass) << osc.details.dump();
  EXPECT_GT(osc.margin, 0.0);
  const auto graph = check_graph_property(imm, kGrid);
  EXPECT_TRUE(graph.pass) << graph.details.dump();
}

TEST(Verify, SeparationPositive) {
  const Immersion imm = make_family_immersion(kPair, {});
  const auto sep = check_separation(imm, kGrid);
  EXPECT_TRUE(sep.record.pass) << sep.record.details.dump();
  EXPECT_GT(sep.r0_estimate, 0.0);
  ASSERT_EQ(sep.r0_per_piece.size(), 2u);
  EXPECT_DOUBLE_EQ(sep.r0_estimate, std::min(sep.r0_per_piece[0], sep.r0_per_piece[1]));
}

TEST(Verify, EmbeddingOfSmallMesh) {
  const Immersion imm = make_family_immersion(kPair, {});
  const auto rec = check_embedding(build_mesh(imm, {60, 11, {}}));
  EXPECT_TRUE(rec.pass) << rec.details.dump();
}

TEST(SheetCount, ApproachesWeightedLimit) {
  // |u(t) - u(2t)| for a single point, reference values at t = 0.05.
  const double want[] = {9.772690735871873, 9.997667286485295, 9.999976666728666};
  const double as[] = {1e-2, 1e-3, 1e-4};
  double prev = 0.0;
  for (int i = 0; i < 3; ++i) {
    const auto s = sheet_count(ConstructionParams({0.0}, as[i]), 0, 0.05);
    EXPECT_NEAR(s.u_difference, want[i], 1e-9);
    EXPECT_GT(s.u_difference, prev);
    prev = s.u_difference;
    EXPECT_NEAR(s.turns, s.u_difference / (2 * std::numbers::pi), 1e-15);
    EXPECT_DOUBLE_EQ(s.predicted, 1.0 / (4 * std::numbers::pi * 0.05));
    EXPECT_DOUBLE_EQ(s.weighted_limit, 10.0);
  }
  const auto fine = sheet_count(ConstructionParams({0.0}, 1e-4), 0, 0.0125);
  EXPECT_NEAR(fine.u_difference, 39.99850673015169429, 1e-9);
}

TEST(SheetCount, Rejections) {
  EXPECT_THROW(sheet_count(kPair, 0, 0.0), std::invalid_argument);
  EXPECT_THROW(sheet_count(kPair, 0, 0.15), std::invalid_argument);  // b + 2t past the split
  EXPECT_THROW(sheet_count(kPair, 2, 0.01), std::out_of_range);
}

TEST(Convergence, DiffsShrink) {
  std::vector<ConstructionParams> family;
  // n = 1: the far-field rotation pi / (2a) lines up mod 2 pi only for a single point.
  for (double a : {0.1, 0.05, 0.025}) family.push_back(ConstructionParams({0.0}, a));
  ConvergenceOptions opt;
  opt.nx = 8;
  opt.ny = 5;
  const auto r = check_convergence(family, 0.1, opt);
  ASSERT_EQ(r.diff_F.size(), 2u);
  EXPECT_GT(r.diff_F[0], r.diff_F[1]);
  EXPECT_GT(r.diff_D1[0], r.diff_D1[1]);
}

TEST(Convergence, Rejections) {
  std::vector<ConstructionParams> two = {kPair, kPair.with_a(0.05)};
  EXPECT_THROW(check_convergence(two, 0.1), std::invalid_argument);
  std::vector<ConstructionParams> up = {kPair.with_a(0.025), kPair.with_a(0.05), kPair};
  EXPECT_THROW(check_convergence(up, 0.1), std::invalid_argument);
}

TEST(Verify, FullReport) {
  VerifyOptions opt;
  opt.grid = kGrid;
  const auto report = run_verification(kPair, opt);
  EXPECT_TRUE(report.all_asserted_pass());
  for (const char* name : {"height", "u_oscillation", "graph_property", "separation", "embedding"}) {
    EXPECT_NE(report.find(name), nullptr) << name;
  }
  const CheckRecord* sheets = report.find("sheet_count_1");
  ASSERT_NE(sheets, nullptr);
  EXPECT_FALSE(sheets->asserted);
  for (size_t i = 1; i < report.checks.size(); ++i) {
    EXPECT_LE(report.checks[i - 1].name, report.checks[i].name);
  }
}

TEST(Verify, FaultFailsReport) {
  VerifyOptions opt;
  opt.grid = kGrid;
  opt.fault.height_drift = 1e-3;
  opt.embedding = false;
  EXPECT_FALSE(run_verification(kPair, opt).all_asserted_pass());
}

TEST(Verify, HelicoidReport) {
  VerifyOptions opt;
  opt.grid = {30, 11, {}};
  const auto report = run_helicoid_verification(DomainSpec::rectangle(-1, 1, 1), opt);
  const CheckRecord* h = report.find("height");
  ASSERT_NE(h, nullptr);
  EXPECT_TRUE(h->pass);
}
